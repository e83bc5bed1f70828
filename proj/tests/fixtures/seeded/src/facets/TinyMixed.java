package facets;

public class TinyMixed {
    private int a;
    private int b;

    public int one() {
        return 1;
    }

    public int two() {
        return 2;
    }

    public int three() {
        return 3;
    }
}

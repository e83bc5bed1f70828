package facets;

public class FewFields {
    private int state;

    public int a() { return 1; }
    public int b() { return 2; }
    public int c() { return 3; }
    public int d() { return 4; }
    public int e() { return 5; }
    public int f() { return 6; }
    public int g() { return 7; }
    public int h() { return 8; }
}

package facets;

public class Cohesive {
    private int width;
    private int height;

    public int area() {
        return width * height;
    }

    public int perimeter() {
        return 2 * (width + height);
    }

    public boolean square() {
        return width == height;
    }

    public void scale(int k) {
        width *= k;
        height *= k;
    }

    public void swap() {
        int t = width;
        width = height;
        height = t;
    }

    public String describe() {
        return width + "x" + height;
    }

    public boolean empty() {
        return width == 0 || height == 0;
    }
}

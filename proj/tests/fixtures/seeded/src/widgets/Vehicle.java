package widgets;

public class Vehicle {
    public int wheels() {
        return 4;
    }
}

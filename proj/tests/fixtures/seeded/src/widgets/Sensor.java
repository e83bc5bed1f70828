package widgets;

public interface Sensor {
    String name();
}

package widgets;

public class Animal {
    public String sound() {
        return "...";
    }
}

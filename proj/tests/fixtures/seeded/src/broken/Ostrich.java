package broken;

public class Ostrich extends Bird {
    @Override
    public void fly() {
    }

    public int run(int speed) {
        return speed * 2;
    }
}

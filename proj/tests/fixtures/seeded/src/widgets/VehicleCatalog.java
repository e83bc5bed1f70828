package widgets;

import java.util.List;

public final class VehicleCatalog {
    public static final class Car extends Vehicle {
    }

    public static final class Bus extends Vehicle {
    }

    public static final class Truck extends Vehicle {
    }

    public static final class Bike extends Vehicle {
    }

    public static final class Scooter extends Vehicle {
    }

    public static final class Tram extends Vehicle {
    }

    public static final class Train extends Vehicle {
    }

    public static final class Ferry extends Vehicle {
    }

    public static final class Van extends Vehicle {
    }

    public static List<Vehicle> all() {
        return List.of(new Car(), new Bus(), new Truck(), new Bike(), new Scooter(), new Tram(), new Train(), new Ferry(), new Van());
    }
}

package widgets;

import java.util.List;

public final class AnimalCatalog {
    public static final class Cat extends Animal {
    }

    public static final class Dog extends Animal {
    }

    public static final class Cow extends Animal {
    }

    public static final class Horse extends Animal {
    }

    public static final class Sheep extends Animal {
    }

    public static final class Goat extends Animal {
    }

    public static final class Pig extends Animal {
    }

    public static final class Duck extends Animal {
    }

    public static final class Goose extends Animal {
    }

    public static final class Rabbit extends Animal {
    }

    public static final class Mouse extends Animal {
    }

    public static List<Animal> all() {
        return List.of(new Cat(), new Dog(), new Cow(), new Horse(), new Sheep(), new Goat(), new Pig(), new Duck(), new Goose(), new Rabbit(), new Mouse());
    }
}

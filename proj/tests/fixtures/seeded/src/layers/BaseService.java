package layers;

public abstract class BaseService {
    public String describe() {
        return getClass().getSimpleName();
    }

    public abstract void start();
}

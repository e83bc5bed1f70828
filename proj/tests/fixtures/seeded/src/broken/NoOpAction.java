package broken;

/** Implements, rather than refuses, an abstract operation. */
public class NoOpAction implements Action {
    @Override
    public void run() {
    }
}

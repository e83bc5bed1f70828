package dispatch;

public class Validator {
    public boolean valid(String name, int age, String email, Object tag) {
        if (name == null) {
            return false;
        }
        if (age < 0) {
            return false;
        }
        if (email.isEmpty()) {
            return false;
        }
        if (tag instanceof Number) {
            return false;
        }
        return true;
    }
}

package dispatch;

public class TagProcessor {
    private int kind;

    public String process() {
        switch (kind) {
        case 1:
            return "header";
        case 2:
            return "body";
        case 3:
            return "footer";
        case 4:
            return "sidebar";
        case 5:
            return "banner";
        default:
            return "other";
        }
    }
}

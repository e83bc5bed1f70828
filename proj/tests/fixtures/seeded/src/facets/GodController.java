package facets;

public class GodController {
    private int requests;
    private String theme;
    private long cacheSize;

    public void onRequest() {
        requests++;
    }

    public void applyTheme(String t) {
        theme = t;
    }

    public void grow() {
        cacheSize *= 2;
    }

    public String route(String path) {
        return "/" + path;
    }

    public int retries() {
        return 3;
    }

    public String locale() {
        return "en";
    }

    public boolean healthy() {
        return true;
    }
}

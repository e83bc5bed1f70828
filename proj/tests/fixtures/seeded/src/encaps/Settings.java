package encaps;

public class Settings {
    public String host = "localhost";
    private int port = 8080;

    public int port() {
        return port;
    }
}

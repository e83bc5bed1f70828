package facets;

/** Account bookkeeping and mail delivery glued into one class. */
public class UserManager {
    private String name;
    private String email;
    private int logins;
    private long lastSeen;
    private String smtpHost;
    private int smtpPort;
    private int sent;
    private boolean throttled;

    public String profile() {
        return name + " <" + email + ">";
    }

    public void changeEmail(String address) {
        email = address;
        logins = 0;
    }

    public void recordLogin(long now) {
        logins++;
        lastSeen = now;
    }

    public long idleSince() {
        return lastSeen;
    }

    public String endpoint() {
        return smtpHost + ":" + smtpPort;
    }

    public void connect(int port) {
        smtpPort = port;
        sent = 0;
    }

    public void send() {
        sent++;
        throttled = sent > 100;
    }

    public boolean isThrottled() {
        return throttled;
    }
}

package layers;

public interface Repository {
    String find(int id);

    void save(int id, String value);
}

package layers;

public class UserService extends BaseService {
    @Override
    public void start() {
        System.out.println(describe());
    }
}

package cycle;

import java.util.ArrayList;
import java.util.List;

public class Customer {
    private final List<Order> orders = new ArrayList<>();

    public int orderCount() {
        return orders.size();
    }
}

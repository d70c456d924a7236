public class AgeCheck {
    public static boolean is_adult(int age) {
        if (age >= 18) {
            return true;
        }
        return false;
    }
}

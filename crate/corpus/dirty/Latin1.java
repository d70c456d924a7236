public class Caf� {
    static int f0(int x) { return x + 0; }
    static int f1(int x) { return x + 1; }
    static int f2(int x) { return x + 2; }
    static int f3(int x) { return x + 3; }
    static int f4(int x) { return x + 4; }
    static int f5(int x) { return x + 5; }
    static int f6(int x) { return x + 6; }
    static int f7(int x) { return x + 7; }
    static int f8(int x) { return x + 8; }
    static int f9(int x) { return x + 9; }
    static int f10(int x) { return x + 10; }
    static int f11(int x) { return x + 11; }
}

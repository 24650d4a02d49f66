class ToStringLoop { void run(int limit, int number) { String a;
for (int i = 0; i < limit; i++) {
}
a += Integer.toString(number);
} }

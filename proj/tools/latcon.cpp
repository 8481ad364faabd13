#include <cstdio>

int main() {
    std::puts("latcon: placeholder");
    return 0;
}

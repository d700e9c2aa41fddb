// placeholder while the library comes up; the real CLI lands with the
// classify/compile pipeline
#include <cstdio>

int main() {
    std::puts("towerforge: not yet wired");
    return 2;
}

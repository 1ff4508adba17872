#include <cstdio>

int main() {
    std::puts("clusterfan: placeholder");
    return 0;
}

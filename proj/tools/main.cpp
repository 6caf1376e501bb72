// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include <iostream>

int main() {
    std::cout << "agtrellis\n";
    return 0;
}

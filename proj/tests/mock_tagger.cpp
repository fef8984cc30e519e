// Test stand-in for a TreeTagger-style process: echoes every input line
// as `line<TAB>NN<TAB>line`. --fail writes a diagnostic to stderr and
// exits nonzero; --drop-last swallows the final record to provoke a
// count mismatch.
#include <cstring>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    bool fail = false, drop_last = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fail") == 0) fail = true;
        if (std::strcmp(argv[i], "--drop-last") == 0) drop_last = true;
    }
    if (fail) {
        std::cerr << "mock tagger failing on request\n";
        return 3;
    }
    std::string line, prev;
    bool have_prev = false;
    while (std::getline(std::cin, line)) {
        if (have_prev) std::cout << prev << "\tNN\t" << prev << '\n';
        prev = std::move(line);
        have_prev = true;
    }
    if (have_prev && !drop_last) std::cout << prev << "\tNN\t" << prev << '\n';
    return 0;
}

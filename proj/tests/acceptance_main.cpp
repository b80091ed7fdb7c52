#include <cstring>

#include "agk/acceptance.hpp"

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--full") == 0) full = true;
    }
    return agk::run_acceptance_and_report(full);
}

#include <iostream>
#include <string>
#include <vector>

#include "qcspec/examples.hpp"

using namespace qcspec;

int main() {
    struct Criterion {
        int no;
        std::string title;
        std::vector<std::string> checks;
    };
    const std::vector<Criterion> criteria = {
        {1, "[9,2,6]_2 worked example", {"example-9-2-6"}},
        {2, "[12,3,4]_2 worked example", {"example-12-3-4"}},
        {3, "[8,6,2]_3 worked example", {"example-8-6-2"}},
        {4, "designed [10,5,4]_3 code", {"design-10-5-4"}},
        {5, "locally repairable [12,2,8]_5 code", {"lrc-c3-12-2-8"}},
        {6, "table of designed codes", {"table2"}},
        {7, "designed codes against BCH, q = 11 and 13", {"table3-q11", "table3-q13"}},
        {8, "locally repairable [15,9,3]_4 code", {"lrc-c1-15-9-3"}},
        {9, "random ensemble properties", {"property-suite"}},
        {10, "improved spectral at least Jensen on the table", {"table2-jensen"}},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        bool pass = true;
        double seconds = 0;
        std::vector<std::string> notes;
        for (const auto& name : c.checks) {
            auto r = run_example(name);
            seconds += r.seconds;
            pass = pass && r.pass();
            for (const auto& l : r.lines)
                if (!l.pass) notes.push_back(name + ": " + l.what + " = " + l.got + " (want " + l.want + ")");
        }
        std::cout << "criterion " << c.no << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << seconds
                  << " s]\n";
        for (const auto& n : notes) std::cout << "    " << n << "\n";
        failed += !pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
    return failed ? 1 : 0;
}

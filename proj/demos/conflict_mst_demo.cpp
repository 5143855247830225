// Solves a small spanning-tree instance where two edges must not be used
// together, then tightens the conflicts until the instance turns infeasible.

#include <iostream>

#include "sdg/applications.hpp"

namespace {

void report(const sdg::ConflictResult& result) {
    switch (result.status) {
        case sdg::ConflictStatus::not_in_class:
            std::cout << "  conflict graph not in class\n";
            return;
        case sdg::ConflictStatus::infeasible:
            std::cout << "  infeasible\n";
            return;
        case sdg::ConflictStatus::feasible:
            std::cout << "  objective " << result.solution->objective << ", edges";
            for (int e : result.solution->chosen_edges) std::cout << ' ' << e;
            std::cout << ", certificate " << result.solution->certificate.to_string() << "\n";
    }
}

}  // namespace

int main() {
    // weighted triangle; edge 0 is ab, edge 1 is bc, edge 2 is ac
    const char* text =
        "3 3\n"
        "0 1 1\n"
        "1 2 2\n"
        "0 2 3\n"
        "conflicts\n"
        "0 1\n";
    auto inst = sdg::parse_conflict_instance(text);
    const auto spec = sdg::ClassSpec::from_kl(1, 1);

    std::cout << "one conflict (ab vs bc):\n";
    report(conflict_free_mst(inst, spec));

    inst.conflict_graph.add_edge(0, 2);
    inst.conflict_graph.add_edge(1, 2);
    std::cout << "all edges mutually conflicting:\n";
    report(conflict_free_mst(inst, spec));
    return 0;
}

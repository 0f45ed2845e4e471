#include "hypershuffle/instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypershuffle/dhg.hpp"

namespace hypershuffle {

const std::vector<NamedInstance>& instance_catalog() {
    static const std::vector<NamedInstance> catalog = {
        {"fixed-degrees", "d_V=((2,1),(0,2),(1,1)), arcs (2,1),(1,1),(1,1); 11 vertex-labeled hypergraphs",
         "vertices a b c\narc a b -> c\narc b -> a\narc c -> a\n"},
        {"example", "five arcs with a self-loop, a degenerate arc and a multi-arc pair",
         "vertices a b c d e f\narc a d -> a b\narc d d -> e\narc b -> c\narc b -> c\narc c f -> c f\n"},
        {"d1", "three arcs (2,1) into one sink; {uu,vv,ww} is isolated without multi-arcs",
         "vertices u v w x\narc u u -> x\narc v v -> x\narc w w -> x\n"},
        {"identical-pair", "two copies of one arc (2,1) over a shared tail",
         "vertices u v x\narc u v -> x\narc u v -> x\n"},
        {"cycle3", "directed 3-cycle, every vertex (1,1)", "vertices a b c\narc a -> b\narc b -> c\narc c -> a\n"},
        {"star", "four arcs (1,1) from a hub with a repeated arc",
         "vertices u v x y\narc u -> x\narc u -> x\narc u -> y\narc v -> y\n"},
        {"loops", "two vertices with a (2,2) arc and two (1,1) arcs",
         "vertices a b\narc a b -> a b\narc a -> b\narc b -> a\n"},
        {"two-tail-3", "three arcs (1,2), two tail vertices",
         "vertices t s a b c\narc t -> a b\narc t -> b c\narc s -> a c\n"},
        {"two-tail-4", "four arcs (1,2), two tail vertices with two arcs each",
         "vertices t s a b c d\narc t -> a b\narc t -> c d\narc s -> a c\narc s -> b d\n"},
        {"two-tail-overlap", "three arcs (1,2) whose heads may contain the tail vertices",
         "vertices t s a b\narc t -> t a\narc s -> s b\narc s -> t a\n"},
        {"two-tail-skew", "four arcs (1,2), tail vertices of out-degree 3 and 1",
         "vertices t s a b c\narc t -> a b\narc t -> a c\narc t -> b c\narc s -> a b\n"},
    };
    return catalog;
}

DirectedHypergraph load_instance(std::string_view name) {
    const auto& catalog = instance_catalog();
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& i) { return i.name == name; });
    if (it == catalog.end()) throw std::invalid_argument("unknown instance '" + std::string(name) + "'");
    return parse_dhg(it->dhg);
}

}  // namespace hypershuffle

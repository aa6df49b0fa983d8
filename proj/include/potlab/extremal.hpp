#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potlab/coloring.hpp"
#include "potlab/multigraph.hpp"
#include "potlab/outputs.hpp"
#include "potlab/tile.hpp"

namespace potlab {

// A color class of the cube under the shapes every 3-realization admits:
// a star with 1..3 edges, or the matching {e, e+111} joined by the
// antipodal automorphism.
struct ColorClass {
    enum class Kind { Star, AntipodalMatching };
    Kind kind = Kind::Star;
    int center = -1;  // star center; -1 for a matching or a single edge
    std::vector<int> edge_ids;  // ascending
};

// Partition of E(Q) into legal color classes, classes sorted by their
// lowest edge id.
struct ClassPartition {
    std::vector<ColorClass> classes;
    int star3_count() const;
};

// All partitions of the cube's edges into exactly color_count legal classes,
// one canonical representative per orbit of Aut(Q) (color names carry no
// information: a partition is a set of classes). Empty for color_count < 4.
std::vector<ClassPartition> enumerate_class_partitions(int color_count);

// Number of raw partitions before orbit reduction (for reporting).
long long count_raw_class_partitions(int color_count);

// Classify the color classes of a coloring of the cube; nullopt when some
// class is neither a star of <= 3 edges nor an antipodal matching.
std::optional<std::vector<ColorClass>> classify_color_classes(const EdgeColoring& lambda);

// One orientation lift of a partition, with its induced pot and the
// exhaustive Scenario-3 verdict for the cube.
struct CensusCandidate {
    ClassPartition partition;
    EdgeColoring coloring;
    Pot pot;
    bool scenario3 = false;
    std::optional<Multigraph> counterexample;  // defeating output when not Scenario 3
};

struct CensusReport {
    int color_count = 0;
    long long raw_partitions = 0;
    long long canonical_partitions = 0;
    long long candidates = 0;
    long long survivors = 0;
    std::vector<CensusCandidate> candidate_list;
    // Scenario-3 survivors with |pot| == 6, one representative per
    // pot-isomorphism class, sorted by canonical pot encoding.
    std::vector<Pot> biminimal_classes;
    // Distinct pot sizes among all Scenario-3 survivors, ascending.
    std::vector<int> survivor_pot_sizes;
};

// Exhaustive census of the colorings of the cube with color_count colors
// whose classes have the legal shapes, orientations lifted one per
// class-flip orbit (stars out of their center, matchings branching on the
// relative orientation). Every candidate pot gets a full Scenario-3 check
// by output enumeration to order 8.
CensusReport census_cube(int color_count, int threads = 1);

// The 5-color census restricted to biminimal candidates: Scenario-3
// survivors with 6 tiles, grouped by pot isomorphism.
CensusReport census_biminimal_cube(int threads = 1);

struct LowerBoundCertificates {
    long long four_color_candidates = 0;
    long long four_color_survivors = 0;   // 0 certifies no 4-color Scenario-3 pot
    bool three_or_fewer_impossible = false;  // 3c < 12 for c <= 3
    long long five_color_candidates = 0;
    long long five_color_survivors = 0;
    int five_color_min_pot_size = 0;  // 6 certifies the tile minimum
    bool star_count_bound_holds = false;  // every 5-color survivor has >= 2 3-stars
};

LowerBoundCertificates verify_lower_bounds(const CensusReport& four, const CensusReport& five);
LowerBoundCertificates verify_lower_bounds(int threads = 1);

struct ExtremalStats {
    int scenario = 1;
    int tile_bound = 0;
    int color_bound = 0;
    std::optional<int> min_tiles;           // T_i within the bounds
    std::optional<int> min_colors;          // B_i within the bounds
    std::optional<Pot> tile_witness;
    std::optional<Pot> color_witness;
    long long pots_examined = 0;
    std::string note;
};

// Exact minimum pot size and color count over pots i-realizing g, within
// the stated bounds. Searches the pot space up to pot isomorphism (tile
// sizes drawn from g's degrees, colors surjective onto [1, k]); the cube
// with scenario 3 and bounds >= (6, 5) is answered from the census instead.
// Throws when the pot space exceeds the enumeration budget.
ExtremalStats minimal_pot_stats(const Multigraph& g, int scenario, int tile_bound,
                                int color_bound);

}  // namespace potlab

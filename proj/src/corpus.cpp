#include "assignalg/corpus.hpp"

#include <stdexcept>

namespace assignalg {

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries;

  entries.push_back(CorpusEntry{
      "weighted-projective-gkm",
      "circle action on a weighted projective line: two fixed points, "
      "values agreeing at the origin",
      R"({
  "kind": "gkm",
  "torus_dim": 1,
  "components": [{"name": "p1"}, {"name": "p2"}],
  "pieces": [{"g": {"span": []}, "members": ["p1", "p2"]}]
})"});

  entries.push_back(CorpusEntry{
      "weighted-projective-strata",
      "stratum-poset form of the weighted projective line",
      R"({
  "kind": "strata",
  "torus_dim": 1,
  "strata": [
    {"id": "p1", "isotropy": {"span": [["1"]]}},
    {"id": "p2", "isotropy": {"span": [["1"]]}},
    {"id": "free", "isotropy": {"span": []}}
  ],
  "order": [["p1", "free"], ["p2", "free"]]
})"});

  entries.push_back(CorpusEntry{
      "roots-of-unity-gkm",
      "circle action with three fixed points joined through the free part",
      R"({
  "kind": "gkm",
  "torus_dim": 1,
  "components": [{"name": "p1"}, {"name": "p2"}, {"name": "p3"}],
  "pieces": [{"g": {"span": []}, "members": ["p1", "p2", "p3"]}]
})"});

  entries.push_back(CorpusEntry{
      "roots-of-unity-strata",
      "stratum-poset form of the three-fixed-point circle action",
      R"({
  "kind": "strata",
  "torus_dim": 1,
  "strata": [
    {"id": "p1", "isotropy": {"span": [["1"]]}},
    {"id": "p2", "isotropy": {"span": [["1"]]}},
    {"id": "p3", "isotropy": {"span": [["1"]]}},
    {"id": "free", "isotropy": {"span": []}}
  ],
  "order": [["p1", "free"], ["p2", "free"], ["p3", "free"]]
})"});

  entries.push_back(CorpusEntry{
      "three-sphere-strata",
      "two-torus action on the three-sphere: two isotropy circles over a "
      "free stratum; quotient by the diagonal gives the rotation sphere",
      R"({
  "kind": "strata",
  "torus_dim": 2,
  "strata": [
    {"id": "C1", "isotropy": {"span": [["1", "0"]]}},
    {"id": "C2", "isotropy": {"span": [["0", "1"]]}},
    {"id": "free", "isotropy": {"span": []}}
  ],
  "order": [["C1", "free"], ["C2", "free"]],
  "circle": {"span": [["1", "1"]]}
})"});

  entries.push_back(CorpusEntry{
      "suspension-torus-gkm",
      "suspension of a two-torus: two fixed points over a two-dimensional "
      "torus, torsion free but not free",
      R"({
  "kind": "gkm",
  "torus_dim": 2,
  "components": [{"name": "p1"}, {"name": "p2"}],
  "pieces": [{"g": {"span": []}, "members": ["p1", "p2"]}]
})"});

  entries.push_back(CorpusEntry{
      "sphere-product-gkm",
      "two-torus action on a product of three spheres: eight fixed points, "
      "moment heights, weights, and the diagonal circle",
      R"({
  "kind": "gkm",
  "torus_dim": 2,
  "components": [
    {"name": "p1", "moment": "-3",
     "weights": [["1", "0"], ["1", "0"], ["0", "1"]]},
    {"name": "p2", "moment": "-1",
     "weights": [["-1", "0"], ["1", "0"], ["0", "1"]]},
    {"name": "p3", "moment": "-1",
     "weights": [["1", "0"], ["-1", "0"], ["0", "1"]]},
    {"name": "p4", "moment": "-1",
     "weights": [["1", "0"], ["1", "0"], ["0", "-1"]]},
    {"name": "p5", "moment": "1",
     "weights": [["-1", "0"], ["-1", "0"], ["0", "1"]]},
    {"name": "p6", "moment": "1",
     "weights": [["-1", "0"], ["1", "0"], ["0", "-1"]]},
    {"name": "p7", "moment": "1",
     "weights": [["1", "0"], ["-1", "0"], ["0", "-1"]]},
    {"name": "p8", "moment": "3",
     "weights": [["-1", "0"], ["-1", "0"], ["0", "-1"]]}
  ],
  "pieces": [
    {"g": {"span": [["0", "1"]]}, "members": ["p1", "p4"]},
    {"g": {"span": [["0", "1"]]}, "members": ["p2", "p6"]},
    {"g": {"span": [["0", "1"]]}, "members": ["p3", "p7"]},
    {"g": {"span": [["0", "1"]]}, "members": ["p5", "p8"]},
    {"g": {"span": [["1", "0"]]}, "members": ["p1", "p2", "p3", "p5"]},
    {"g": {"span": [["1", "0"]]}, "members": ["p4", "p6", "p7", "p8"]}
  ],
  "circle": {"span": [["1", "1"]]}
})"});

  entries.push_back(CorpusEntry{
      "sphere-product-strata",
      "stratum-poset form of the product of three spheres",
      R"({
  "kind": "strata",
  "torus_dim": 2,
  "strata": [
    {"id": "p1", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p2", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p3", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p4", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p5", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p6", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p7", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "p8", "isotropy": {"span": [["1", "0"], ["0", "1"]]}},
    {"id": "w14", "isotropy": {"span": [["0", "1"]]}},
    {"id": "w26", "isotropy": {"span": [["0", "1"]]}},
    {"id": "w37", "isotropy": {"span": [["0", "1"]]}},
    {"id": "w58", "isotropy": {"span": [["0", "1"]]}},
    {"id": "s1235", "isotropy": {"span": [["1", "0"]]}},
    {"id": "s4678", "isotropy": {"span": [["1", "0"]]}},
    {"id": "free", "isotropy": {"span": []}}
  ],
  "order": [
    ["p1", "w14"], ["p4", "w14"],
    ["p2", "w26"], ["p6", "w26"],
    ["p3", "w37"], ["p7", "w37"],
    ["p5", "w58"], ["p8", "w58"],
    ["p1", "s1235"], ["p2", "s1235"], ["p3", "s1235"], ["p5", "s1235"],
    ["p4", "s4678"], ["p6", "s4678"], ["p7", "s4678"], ["p8", "s4678"],
    ["w14", "free"], ["w26", "free"], ["w37", "free"], ["w58", "free"],
    ["s1235", "free"], ["s4678", "free"]
  ]
})"});

  entries.push_back(CorpusEntry{
      "reduced-four-points-gkm",
      "four fixed points over a one-dimensional torus, values agreeing at "
      "the origin: the reduced form of the sphere-product quotient",
      R"({
  "kind": "gkm",
  "torus_dim": 1,
  "components": [{"name": "q1"}, {"name": "q2"}, {"name": "q3"}, {"name": "q4"}],
  "pieces": [{"g": {"span": []}, "members": ["q1", "q2", "q3", "q4"]}]
})"});

  entries.push_back(CorpusEntry{
      "rotation-gkm",
      "rotation action on the sphere with moment heights and weights",
      R"({
  "kind": "gkm",
  "torus_dim": 1,
  "components": [
    {"name": "north", "moment": "1", "weights": [["-1"]]},
    {"name": "south", "moment": "-1", "weights": [["1"]]}
  ],
  "pieces": [{"g": {"span": []}, "members": ["north", "south"]}],
  "circle": {"span": [["1"]]}
})"});

  entries.push_back(CorpusEntry{
      "cp3-weights-gkm",
      "fixed-point weight data of a two-torus action on complex projective "
      "3-space with a doubled weight pattern",
      R"({
  "kind": "gkm",
  "torus_dim": 2,
  "components": [
    {"name": "z0", "weights": [["2", "0"], ["0", "2"], ["1", "1"]]},
    {"name": "z1", "weights": [["-2", "0"], ["-2", "2"], ["-1", "1"]]},
    {"name": "z2", "weights": [["0", "-2"], ["2", "-2"], ["1", "-1"]]},
    {"name": "z3", "weights": [["-1", "-1"], ["1", "-1"], ["-1", "1"]]}
  ],
  "pieces": []
})"});

  entries.push_back(CorpusEntry{
      "nonsurjective-extension",
      "three dependent linear forms with pairwise compatible targets and "
      "no global extension",
      R"({
  "kind": "extension",
  "ambient_dim": 2,
  "forms": [["1", "0"], ["0", "1"], ["1", "1"]],
  "constraints": [
    {"forms": [0], "target": "u2"},
    {"forms": [1], "target": "u1"},
    {"forms": [2], "target": "u1"}
  ]
})"});

  return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no bundled model named '" + name + "'");
}

}  // namespace assignalg

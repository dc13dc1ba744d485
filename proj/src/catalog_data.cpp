#include "thetapos/dynkin.hpp"

namespace thetapos {

// Diagram catalog: restricted root systems with node multiplicities for the
// groups exercised by the classification and the matrix model. Overridable at
// runtime via THETA_POS_CATALOG.
const char* builtin_catalog_json() {
  return R"JSON([
  {"name": "split-A1", "nodes": [{"label": "a1", "mult": 1}], "edges": []},
  {"name": "split-A2",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1}]},
  {"name": "split-A3",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1}, {"from": "a2", "to": "a3", "bond": 1}]},
  {"name": "split-B2",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 2, "arrowToward": "a2"}]},
  {"name": "split-B3",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"}]},
  {"name": "split-C3",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a2"}]},
  {"name": "split-D4",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1},
             {"label": "a3", "mult": 1}, {"label": "a4", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 1},
             {"from": "a2", "to": "a4", "bond": 1}]},
  {"name": "split-F4",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1},
             {"label": "a3", "mult": 1}, {"label": "a4", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"},
             {"from": "a3", "to": "a4", "bond": 1}]},
  {"name": "split-G2",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 3, "arrowToward": "a2"}]},

  {"name": "so(3,5)",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 2}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"}]},
  {"name": "so(3,6)",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 3}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"}]},
  {"name": "so(3,7)",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 4}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"}]},
  {"name": "so(4,6)",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1},
             {"label": "a3", "mult": 1}, {"label": "a4", "mult": 2}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 1},
             {"from": "a3", "to": "a4", "bond": 2, "arrowToward": "a4"}]},

  {"name": "sp(4,R)",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 2, "arrowToward": "a1"}]},
  {"name": "su(2,2)",
   "nodes": [{"label": "a1", "mult": 2}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 2, "arrowToward": "a1"}]},
  {"name": "so(2,5)",
   "nodes": [{"label": "a1", "mult": 3}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 2, "arrowToward": "a1"}]},
  {"name": "so*(8)",
   "nodes": [{"label": "a1", "mult": 4}, {"label": "a2", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 2, "arrowToward": "a1"}]},
  {"name": "sp(6,R)",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a2"}]},
  {"name": "su(3,3)",
   "nodes": [{"label": "a1", "mult": 2}, {"label": "a2", "mult": 2}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a2"}]},
  {"name": "so*(12)",
   "nodes": [{"label": "a1", "mult": 4}, {"label": "a2", "mult": 4}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a2"}]},
  {"name": "e7(-25)",
   "nodes": [{"label": "a1", "mult": 8}, {"label": "a2", "mult": 8}, {"label": "a3", "mult": 1}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a2"}]},

  {"name": "e6-f4",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1},
             {"label": "a3", "mult": 2}, {"label": "a4", "mult": 2}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"},
             {"from": "a3", "to": "a4", "bond": 1}]},
  {"name": "e7-f4",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1},
             {"label": "a3", "mult": 4}, {"label": "a4", "mult": 4}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"},
             {"from": "a3", "to": "a4", "bond": 1}]},
  {"name": "e8-f4",
   "nodes": [{"label": "a1", "mult": 1}, {"label": "a2", "mult": 1},
             {"label": "a3", "mult": 8}, {"label": "a4", "mult": 8}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1},
             {"from": "a2", "to": "a3", "bond": 2, "arrowToward": "a3"},
             {"from": "a3", "to": "a4", "bond": 1}]},

  {"name": "su(2,3)", "nonReduced": true,
   "nodes": [{"label": "a1", "mult": 2}, {"label": "a2", "mult": 2}],
   "edges": [{"from": "a1", "to": "a2", "bond": 2, "arrowToward": "a2"}]},
  {"name": "sl(3,H)",
   "nodes": [{"label": "a1", "mult": 4}, {"label": "a2", "mult": 4}],
   "edges": [{"from": "a1", "to": "a2", "bond": 1}]}
])JSON";
}

}  // namespace thetapos

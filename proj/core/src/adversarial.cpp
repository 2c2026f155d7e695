// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srm/adversarial.hpp"

#include "srm/errors.hpp"

namespace srm {

AdversarialInstance make_adversarial(int t_prime, int q) {
  if (t_prime < 2 || q < 3) {
    throw ValidationError("adversarial instance needs T' >= 2 and q >= 3");
  }
  AdversarialInstance inst;
  inst.t_prime = t_prime;
  inst.q = q;
  std::vector<Edge> edges;
  NodeId next = 0;

  const int clique = t_prime + 1;
  for (int i = 0; i < clique; ++i) inst.clique_nodes.push_back(next++);
  for (int i = 0; i < clique; ++i) {
    for (int j = i + 1; j < clique; ++j) {
      edges.push_back({inst.clique_nodes[i], inst.clique_nodes[j]});
    }
  }
  inst.v0 = inst.clique_nodes[0];

  std::vector<NodeId> spine;
  for (int i = 1; i <= q - 1; ++i) spine.push_back(next++);
  inst.path_nodes = spine;
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
    edges.push_back({spine[i], spine[i + 1]});
  }
  for (NodeId s : spine) {
    for (int l = 0; l < t_prime; ++l) {
      const NodeId leaf = next++;
      inst.path_nodes.push_back(leaf);
      edges.push_back({s, leaf});
    }
  }
  inst.v1 = spine.front();
  inst.vq_minus_1 = spine.back();

  inst.vq = next++;
  inst.star_nodes.push_back(inst.vq);
  const int leaves = (t_prime + 1) * (t_prime + 1);
  std::vector<Edge> spokes;
  for (int l = 0; l < leaves; ++l) {
    const NodeId leaf = next++;
    inst.star_nodes.push_back(leaf);
    spokes.push_back({inst.vq, leaf});
  }
  edges.insert(edges.end(), spokes.begin(), spokes.end());

  edges.push_back(make_edge(inst.v0, inst.v1));
  edges.push_back(make_edge(inst.vq_minus_1, inst.vq));
  inst.graph = Graph::from_pairs(next, edges);

  // A star is below T' once it has at most T'^2 - 1 leaves.
  inst.witness_edges.push_back(make_edge(inst.v0, inst.v1));
  inst.witness_edges.push_back(make_edge(inst.vq_minus_1, inst.vq));
  inst.witness_edges.push_back(
      make_edge(inst.clique_nodes[0], inst.clique_nodes[1]));
  const int cut = leaves - (t_prime * t_prime - 1);
  for (int l = 0; l < cut; ++l) inst.witness_edges.push_back(spokes[l]);
  return inst;
}

}  // namespace srm

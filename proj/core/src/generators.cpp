#include "kegraph/generators.hpp"

#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace kegraph {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

// std::uniform_*_distribution output differs between standard libraries;
// these keep generated graphs identical everywhere for a given seed.
double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

Graph cycle(int k) {
  require(k >= 3, "cycle requires k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(static_cast<std::size_t>(k), edges);
}

Graph path(int k) {
  require(k >= 1, "path requires k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(k), edges);
}

Graph complete(int k) {
  require(k >= 1, "complete requires k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return Graph(static_cast<std::size_t>(k), edges);
}

Graph complete_minus_edge(int k) {
  require(k >= 2, "complete_minus_edge requires k >= 2");
  return delete_edge(complete(k), Edge(0, 1));
}

Graph star(int k) {
  require(k >= 1, "star requires k >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(static_cast<std::size_t>(k + 1), edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "complete_bipartite requires non-negative part sizes");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(static_cast<std::size_t>(a + b), edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph gen_random_ke(int s, int a, double extra_edge_prob, std::uint64_t seed) {
  require(a >= 1 && s >= a, "gen_random_ke requires 1 <= a <= s");
  require(extra_edge_prob >= 0.0 && extra_edge_prob <= 1.0, "edge probability outside [0,1]");
  std::mt19937_64 rng(seed);

  std::vector<int> target(static_cast<std::size_t>(s));
  std::iota(target.begin(), target.end(), 0);
  for (std::size_t i = target.size(); i > 1; --i) std::swap(target[i - 1], target[below(rng, i)]);

  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) edges.emplace_back(s + i, target[static_cast<std::size_t>(i)]);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < s; ++j) {
      if (j == target[static_cast<std::size_t>(i)]) continue;
      if (unit_real(rng) < extra_edge_prob) edges.emplace_back(s + i, j);
    }
  }
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) {
      if (unit_real(rng) < extra_edge_prob) edges.emplace_back(s + i, s + j);
    }
  }
  return Graph(static_cast<std::size_t>(s + a), edges);
}

Graph gen_gpq(int p, int q) {
  require(q >= 2 && p >= q, "gen_gpq requires p >= q >= 2");
  const auto a = [](int i) { return i - 1; };
  const auto b = [p](int i) { return p + i - 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) edges.emplace_back(a(i), a(j));
  }
  for (int i = 1; i <= p; ++i) edges.emplace_back(b(i), a(i));
  for (int i = 1; i <= q; ++i) edges.emplace_back(b(i), a(i % q + 1));
  for (int j = q + 1; j <= p; ++j) {
    edges.emplace_back(a(j), b(1));
    edges.emplace_back(a(j), b(q));
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= p; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= p; ++i) labels.push_back("b" + std::to_string(i));
  return Graph(static_cast<std::size_t>(2 * p), edges).with_labels(std::move(labels));
}

Graph gen_hk(int k) {
  require(k >= 1, "gen_hk requires k >= 1");
  const int len = 2 * k + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  edges.emplace_back(0, len);
  std::vector<std::string> labels(static_cast<std::size_t>(len + 1));
  labels[0] = "v";
  labels[static_cast<std::size_t>(len)] = "w";
  return Graph(static_cast<std::size_t>(len + 1), edges).with_labels(std::move(labels));
}

}  // namespace kegraph

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "semcom/types.hpp"

namespace semcom::semantics {

// Maximal alphanumeric runs in input order, original case preserved.
std::vector<std::string> tokenize(std::string_view text);

// Number of alphabetic characters; wire size of hand-written triplet text
// scales with this.
std::size_t letter_count(std::string_view text);

// Text -> fixed-dimension vector. Must be deterministic; scoring treats the
// output as an opaque direction, so scale does not matter.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<double> embed(std::string_view text) const = 0;
  virtual std::size_t dimension() const = 0;
};

// Hashed bag of words: case-folded alphanumeric tokens, each FNV-1a-hashed
// into one of `dimension` buckets with unit weight. Text with no such tokens
// hashes as a single raw token so the vector is never all-zero.
class HashEmbedder final : public Embedder {
 public:
  static constexpr std::size_t kDefaultDimension = 256;

  explicit HashEmbedder(std::size_t dimension = kDefaultDimension);

  std::vector<double> embed(std::string_view text) const override;
  std::size_t dimension() const override { return dim_; }

 private:
  std::size_t dim_;
};

// Cosine similarity clamped into [0, 1]; embedders with signed components
// could otherwise push it negative. Zero vectors are rejected.
double cosine(const std::vector<double>& u, const std::vector<double>& v);

// Similarity between one triplet and the knowledge base it came from.
double importance_score(std::string_view triplet_text, std::string_view kb_text,
                        const Embedder& e);

// Similarity between what was sent and what the receiver decoded.
double recovery_score(std::string_view original, std::string_view recovered,
                      const Embedder& e);

// Sum over chosen triplets of importance * recovery for one device.
double device_semantic_efficiency(const std::vector<std::uint8_t>& eta,
                                  const std::vector<Triplet>& triplets);

// Objective value: sum over selected devices of their efficiency.
double total_objective(const Selection& sel, const Scenario& s);

// Everything any selection could score: sum of importance * recovery over
// all triplets of all devices.
double max_semantic_mass(const Scenario& s);

// total_objective as a percentage of max_semantic_mass (which must be > 0).
double se_percent(const Selection& sel, const Scenario& s);

}  // namespace semcom::semantics

#include "semcom/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "semcom/error.hpp"

namespace semcom::semantics {

namespace {

std::uint64_t fnv1a(std::string_view token) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : token) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string token;
  for (const char c : text) {
    if (word_char(c)) {
      token.push_back(c);
    } else if (!token.empty()) {
      out.push_back(std::move(token));
      token.clear();
    }
  }
  if (!token.empty()) out.push_back(std::move(token));
  return out;
}

std::size_t letter_count(std::string_view text) {
  std::size_t n = 0;
  for (const char c : text)
    if (std::isalpha(static_cast<unsigned char>(c))) ++n;
  return n;
}

HashEmbedder::HashEmbedder(std::size_t dimension) : dim_(dimension) {
  if (dim_ == 0) fail(errc::invalid_argument, "embedder: dimension must be > 0");
}

std::vector<double> HashEmbedder::embed(std::string_view text) const {
  if (text.empty()) fail(errc::invalid_argument, "embedder: text must be non-empty");
  std::vector<double> vec(dim_, 0.0);
  auto toks = tokenize(text);
  if (toks.empty()) {
    // no word characters at all; hash the raw text so the vector is non-zero
    vec[fnv1a(text) % dim_] += 1.0;
    return vec;
  }
  for (auto& tok : toks) {
    for (auto& c : tok)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    vec[fnv1a(tok) % dim_] += 1.0;
  }
  return vec;
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size())
    fail(errc::invalid_argument, "cosine: dimension mismatch");
  if (u.empty()) fail(errc::invalid_argument, "cosine: empty vectors");
  double dot = 0, nu = 0, nv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0 || nv == 0) fail(errc::invalid_argument, "cosine: zero vector");
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), 0.0, 1.0);
}

double importance_score(std::string_view triplet_text, std::string_view kb_text,
                        const Embedder& e) {
  return cosine(e.embed(triplet_text), e.embed(kb_text));
}

double recovery_score(std::string_view original, std::string_view recovered,
                      const Embedder& e) {
  return cosine(e.embed(original), e.embed(recovered));
}

double device_semantic_efficiency(const std::vector<std::uint8_t>& eta,
                                  const std::vector<Triplet>& triplets) {
  if (eta.size() != triplets.size())
    fail(errc::invalid_argument, "efficiency: eta/triplet count mismatch");
  double acc = 0;
  for (std::size_t n = 0; n < triplets.size(); ++n)
    if (eta[n]) acc += triplets[n].importance * triplets[n].recovery;
  return acc;
}

double total_objective(const Selection& sel, const Scenario& s) {
  validate_shape(sel, s);
  double acc = 0;
  for (std::size_t k = 0; k < s.devices.size(); ++k)
    if (sel.alpha[k])
      acc += device_semantic_efficiency(sel.eta[k], s.devices[k].triplets);
  return acc;
}

double max_semantic_mass(const Scenario& s) {
  double acc = 0;
  for (const auto& d : s.devices)
    for (const auto& t : d.triplets) acc += t.importance * t.recovery;
  return acc;
}

double se_percent(const Selection& sel, const Scenario& s) {
  const double mass = max_semantic_mass(s);
  if (!(mass > 0))
    fail(errc::invalid_argument, "se_percent: scenario carries no semantic mass");
  return 100.0 * total_objective(sel, s) / mass;
}

}  // namespace semcom::semantics

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "twistcert/word.hpp"

namespace twistcert {

struct GroupPresentationData {
  std::string name;
  int p = 2, q = 3, r = 7;
  std::vector<Word> relators;  // extra relators on top of the triangle relations
};

// Format: '#' comments, "name <id>", "signature p q r", then one word per line.
GroupPresentationData parse_relators(std::string_view text);

struct GroupClass {
  int representative = 0;  // element index
  std::vector<int> members;
  int element_order = 1;
  std::size_t size() const { return members.size(); }
};

// Finite group realised by its right-regular permutation action. Element i is
// the coset reached from the identity coset 0 along element_word(i).
class QuotientGroup {
 public:
  int order() const { return n_; }
  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int power(int a, long k) const;
  int element_order(int a) const { return order_[static_cast<std::size_t>(a)]; }
  int exponent() const { return exponent_; }
  int generator(Gen g) const { return gen_[static_cast<int>(g)]; }
  // Image of generator g^(+-1) acting on coset indices.
  std::vector<int> generator_permutation(Gen g) const;
  const Word& element_word(int a) const { return words_[static_cast<std::size_t>(a)]; }
  int element_of_word(const Word& w) const;

  const std::vector<GroupClass>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }
  int class_of_word(const Word& w) const { return class_of(element_of_word(w)); }
  // Class of g^k for g in class c; well defined on classes.
  int power_class(int c, long k) const;
  int inverse_class(int c) const { return power_class(c, -1); }

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }

 private:
  friend QuotientGroup coset_enumerate(const GroupPresentationData&, std::size_t);
  void finish();

  std::string name_;
  int p_ = 0, q_ = 0, r_ = 0;
  int n_ = 0;
  int exponent_ = 1;
  int gen_[3] = {0, 0, 0};
  std::vector<std::array<int, 6>> table_;  // columns x X y Y z Z
  std::vector<int> mul_, inv_, order_, class_of_;
  std::vector<Word> words_;
  std::vector<GroupClass> classes_;
  std::vector<int> power_map_;  // class * exponent + (k mod exponent)
};

// Coset enumeration (HLT with coincidence handling) of
// <x, y, z | x^p, y^q, z^r, xyz, relators> over the trivial subgroup.
QuotientGroup coset_enumerate(const GroupPresentationData& data, std::size_t max_cosets = 4'000'000);

struct CoverReport {
  int genus = 0;
  bool torsion_free = false;
  int generator_orders[3] = {0, 0, 0};
};

// Throws NotASurface unless x, y, z keep orders p, q, r in the quotient.
CoverReport verify_cover(const QuotientGroup& g);

nlohmann::json group_json(const QuotientGroup& g);

}  // namespace twistcert

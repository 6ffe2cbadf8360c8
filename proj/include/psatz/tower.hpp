#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psatz/rat.hpp"

namespace psatz {

struct tower_incomparable : std::runtime_error {
    explicit tower_incomparable(const std::string& m)
        : std::runtime_error("incomparable tower values: " + m) {}
};

// Lazily evaluated expression over {rational, +, *, ^}; power towers stay
// symbolic. Comparison is exact: direct evaluation when both sides fit the
// bit ceiling, otherwise descent on upper/lower log2 bounds.
class tower {
  public:
    tower() : tower(rat_of(0)) {}
    tower(long n) : tower(rat_of(n)) {}
    tower(const rat& q);

    static tower sum(std::vector<tower> ts);
    static tower prod(std::vector<tower> ts);
    static tower pow(tower base, tower expo);

    friend tower operator+(const tower& a, const tower& b) { return sum({a, b}); }
    friend tower operator-(const tower& a, const tower& b) {
        return sum({a, prod({tower(-1), b})});
    }
    friend tower operator*(const tower& a, const tower& b) { return prod({a, b}); }

    // exact rational value if it fits within `max_bits` of numerator/denominator
    std::optional<rat> try_eval(unsigned long max_bits = default_eval_bits) const;

    std::string str() const;

    static constexpr unsigned long default_eval_bits = 1ul << 26;

    struct node;
    std::shared_ptr<const node> n;

  private:
    explicit tower(std::shared_ptr<const node> p) : n(std::move(p)) {}
};

// exact ordering; throws tower_incomparable when the descent cannot decide
// (formal values with non-integer exponents compared too closely)
int tower_cmp(const tower& a, const tower& b);
inline bool tower_le(const tower& a, const tower& b) { return tower_cmp(a, b) <= 0; }
tower tower_max(const tower& a, const tower& b);

} // namespace psatz

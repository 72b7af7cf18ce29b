#ifndef ROTLAT_BITS_HPP_
#define ROTLAT_BITS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rotlat {

  using index_t = std::uint32_t;
  using mask_t  = std::uint64_t;

  // Dense square bit matrix; row i is a bitset over columns.
  class BitMatrix {
   public:
    BitMatrix() = default;

    explicit BitMatrix(std::size_t n)
        : _n(n), _words((n + 63) / 64), _data(_n * _words, 0) {}

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t words() const noexcept {
      return _words;
    }

    bool get(std::size_t i, std::size_t j) const noexcept {
      return (_data[i * _words + j / 64] >> (j % 64)) & 1u;
    }

    void set(std::size_t i, std::size_t j) noexcept {
      _data[i * _words + j / 64] |= mask_t(1) << (j % 64);
    }

    std::span<mask_t const> row(std::size_t i) const noexcept {
      return {_data.data() + i * _words, _words};
    }

    std::span<mask_t> row(std::size_t i) noexcept {
      return {_data.data() + i * _words, _words};
    }

    std::size_t row_count(std::size_t i) const noexcept {
      std::size_t c = 0;
      for (mask_t w : row(i)) {
        c += std::popcount(w);
      }
      return c;
    }

    // Reflexive-transitive closure (Warshall, word parallel).
    void close_reflexive_transitive() {
      for (std::size_t i = 0; i < _n; ++i) {
        set(i, i);
      }
      for (std::size_t k = 0; k < _n; ++k) {
        auto rk = row(k);
        for (std::size_t i = 0; i < _n; ++i) {
          if (get(i, k)) {
            auto ri = row(i);
            for (std::size_t w = 0; w < _words; ++w) {
              ri[w] |= rk[w];
            }
          }
        }
      }
    }

    BitMatrix transposed() const {
      BitMatrix t(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          if (get(i, j)) {
            t.set(j, i);
          }
        }
      }
      return t;
    }

    bool operator==(BitMatrix const&) const = default;

   private:
    std::size_t         _n     = 0;
    std::size_t         _words = 0;
    std::vector<mask_t> _data;
  };

  namespace detail {
    inline bool subset(std::span<mask_t const> a,
                       std::span<mask_t const> b) noexcept {
      for (std::size_t w = 0; w < a.size(); ++w) {
        if (a[w] & ~b[w]) {
          return false;
        }
      }
      return true;
    }

    template <typename F>
    void for_each_bit(mask_t m, F&& f) {
      while (m != 0) {
        f(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
      }
    }

    template <typename F>
    void for_each_bit(std::span<mask_t const> words, F&& f) {
      for (std::size_t w = 0; w < words.size(); ++w) {
        for_each_bit(words[w], [&](std::size_t b) { f(w * 64 + b); });
      }
    }

    inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
      while (b != 0) {
        a %= b;
        std::swap(a, b);
      }
      return a;
    }

    inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) noexcept {
      return a / gcd(a, b) * b;
    }
  }  // namespace detail

}  // namespace rotlat

#endif  // ROTLAT_BITS_HPP_

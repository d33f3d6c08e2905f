#ifndef GLU_PERM4_HPP
#define GLU_PERM4_HPP

#include <array>
#include <cstdint>
#include <string>

namespace glu {

// A permutation of the vertex labels {0,1,2,3} of a tetrahedron.
// Face k of a tetrahedron is the face opposite vertex k, so a permutation
// acting on vertex labels also acts on face labels.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a),
                                                       static_cast<std::uint8_t>(b),
                                                       static_cast<std::uint8_t>(c),
                                                       static_cast<std::uint8_t>(d)} {}

    static bool is_valid(int a, int b, int c, int d) {
        int seen = 0;
        for (int x : {a, b, c, d}) {
            if (x < 0 || x > 3) return false;
            seen |= 1 << x;
        }
        return seen == 0xF;
    }

    int operator[](int i) const { return img_[i]; }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    // (a.then(b))[i] == b[a[i]] : apply a first, then b.
    Perm4 then(const Perm4& b) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[i] = static_cast<std::uint8_t>(b.img_[img_[i]]);
        return r;
    }

    // +1 for even permutations, -1 for odd.
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv & 1) ? -1 : 1;
    }

    bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

    // Lexicographic rank in S4, 0..23.  The identity has index 0.
    int index() const {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            static const int fact[4] = {6, 2, 1, 1};
            idx += smaller * fact[i];
        }
        return idx;
    }

    static Perm4 from_index(int idx) {
        std::array<int, 4> pool = {0, 1, 2, 3};
        std::array<int, 4> out{};
        static const int fact[4] = {6, 2, 1, 1};
        for (int i = 0; i < 4; ++i) {
            int k = idx / fact[i];
            idx %= fact[i];
            out[i] = pool[k];
            for (int j = k; j < 3 - i; ++j) pool[j] = pool[j + 1];
        }
        return Perm4(out[0], out[1], out[2], out[3]);
    }

    static Perm4 transposition(int a, int b) {
        Perm4 p;
        p.img_[a] = static_cast<std::uint8_t>(b);
        p.img_[b] = static_cast<std::uint8_t>(a);
        return p;
    }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return img_ != o.img_; }
    bool operator<(const Perm4& o) const { return img_ < o.img_; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 4; ++i) s += static_cast<char>('0' + img_[i]);
        return s + ")";
    }

private:
    std::array<std::uint8_t, 4> img_;
};

}  // namespace glu

#endif

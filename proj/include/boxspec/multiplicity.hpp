#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boxspec {

/// Dimension of an eigenspace: a positive finite count or infinite.
/// Dimension zero is represented by absence of the spectral point, never
/// by a Multiplicity value.
class Multiplicity {
public:
    static Multiplicity finite(std::uint64_t count) {
        if (count == 0)
            throw std::invalid_argument("Multiplicity: finite count must be >= 1");
        Multiplicity m;
        m.count_ = count;
        return m;
    }
    static Multiplicity infinite() {
        Multiplicity m;
        m.infinite_ = true;
        return m;
    }

    bool is_infinite() const { return infinite_; }
    std::uint64_t count() const {
        if (infinite_)
            throw std::logic_error("Multiplicity: count() on infinite multiplicity");
        return count_;
    }

    // Tensor rule: multiplicities multiply across factors.
    friend Multiplicity operator*(const Multiplicity& a, const Multiplicity& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.count_ * b.count_);
    }
    // Collision rule: multiplicities of merged eigenvalues add.
    friend Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.count_ + b.count_);
    }

    bool operator==(const Multiplicity&) const = default;

    std::string str() const {
        return infinite_ ? "inf" : std::to_string(count_);
    }

private:
    Multiplicity() = default;
    std::uint64_t count_ = 1;
    bool infinite_ = false;
};

/// Extended cardinal for harmonic-space dimensions: Zero, Finite(n) or Infinite.
class ExtendedCardinal {
public:
    enum class Kind { Zero, Finite, Infinite };

    static ExtendedCardinal zero() { return ExtendedCardinal(Kind::Zero, 0); }
    static ExtendedCardinal finite(std::uint64_t count) {
        if (count == 0) return zero();
        return ExtendedCardinal(Kind::Finite, count);
    }
    static ExtendedCardinal infinite() { return ExtendedCardinal(Kind::Infinite, 0); }
    static ExtendedCardinal from(const Multiplicity& m) {
        return m.is_infinite() ? infinite() : finite(m.count());
    }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    std::uint64_t count() const {
        if (kind_ != Kind::Finite)
            throw std::logic_error("ExtendedCardinal: count() on non-finite value");
        return count_;
    }

    // Cardinal arithmetic: Zero absorbs under product, Infinite under sum.
    friend ExtendedCardinal operator*(const ExtendedCardinal& a, const ExtendedCardinal& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return finite(a.count_ * b.count_);
    }
    friend ExtendedCardinal operator+(const ExtendedCardinal& a, const ExtendedCardinal& b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return finite(a.count_ + b.count_);
    }

    bool operator==(const ExtendedCardinal&) const = default;

    std::string str() const {
        switch (kind_) {
            case Kind::Zero: return "0";
            case Kind::Infinite: return "inf";
            default: return std::to_string(count_);
        }
    }

private:
    ExtendedCardinal(Kind k, std::uint64_t c) : kind_(k), count_(c) {}
    Kind kind_;
    std::uint64_t count_;
};

}  // namespace boxspec

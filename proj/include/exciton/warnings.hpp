#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace exciton {

/// Soft conditions carried on results. None of these stop a computation.
enum class Warning : std::uint32_t {
    none = 0,
    long_chain = 1u << 0,         // chain longer than the atomic wavelength
    dark_mode = 1u << 1,          // requested mode carries no dipole
    near_field = 1u << 2,         // observation closer than the far-field threshold
    before_arrival = 1u << 3,     // observation time precedes the retarded delay
    coupling_invalid = 1u << 4,   // point-dipole coupling used below segment length
    resonant_neighbors = 1u << 5, // neighbouring segments share a collective energy
};

class Warnings {
public:
    constexpr Warnings() = default;
    constexpr Warnings(Warning w) : bits_(static_cast<std::uint32_t>(w)) {}

    constexpr Warnings& operator|=(Warnings o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr Warnings operator|(Warnings o) const
    {
        Warnings r = *this;
        r |= o;
        return r;
    }
    constexpr bool has(Warning w) const { return (bits_ & static_cast<std::uint32_t>(w)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool operator==(const Warnings&) const = default;

    std::vector<std::string> names() const;

private:
    std::uint32_t bits_ = 0;
};

}  // namespace exciton

#pragma once
#include <charconv>
#include <cstdint>
#include <string>

namespace vflock {

// shortest round-trip formatting via to_chars: locale-independent and
// byte-stable across runs, which the determinism contract relies on
inline void append_num(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

inline void append_num(std::string& out, long v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

inline void append_num(std::string& out, int v) {
    append_num(out, static_cast<long>(v));
}

inline void append_num(std::string& out, std::uint64_t v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

inline std::string num_str(double v) {
    std::string s;
    append_num(s, v);
    return s;
}

} // namespace vflock

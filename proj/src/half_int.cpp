#include "casex/half_int.hpp"

#include <charconv>

#include "casex/errors.hpp"

namespace casex {

HalfInt parse_half_int(std::string_view text) {
    auto bad = [&] { throw ArgumentError("not a half-integer: '" + std::string(text) + "'"); };

    auto parse_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) bad();
        return v;
    };

    if (text.empty()) bad();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return HalfInt(parse_int(text));
    if (text.substr(slash + 1) != "2") bad();
    int num = parse_int(text.substr(0, slash));
    if (num % 2 == 0) bad(); // "4/2" is not canonical; demand "2"
    return HalfInt::from_twice(num);
}

std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice() / 2);
    return std::to_string(h.twice()) + "/2";
}

} // namespace casex

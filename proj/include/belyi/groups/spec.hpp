#ifndef BELYI_GROUPS_SPEC_HPP
#define BELYI_GROUPS_SPEC_HPP

// Group descriptors such as "sym:8", "alt:6", "sl2:11", "psl2:7", "znxzn:5",
// "gl3f2" and "h4:sl2:11".

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "belyi/groups/abelian.hpp"
#include "belyi/groups/h4.hpp"
#include "belyi/groups/matrix.hpp"
#include "belyi/groups/symmetric.hpp"

namespace belyi {

using AnyGroup = std::variant<SymmetricGroup, AlternatingGroup, SL2, PSL2, CyclicSquare, GL3F2,
                              H4Group<SL2>, H4Group<PSL2>, H4Group<SymmetricGroup>,
                              H4Group<AlternatingGroup>>;

class group_spec_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline unsigned parse_group_parameter(std::string_view spec, std::string_view text) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw group_spec_error("bad parameter in group spec '" + std::string(spec) + "'");
  return v;
}

template <class Result>
Result make_simple_group(std::string_view spec) {
  if (spec == "gl3f2") {
    if constexpr (std::is_constructible_v<Result, GL3F2>) return GL3F2{};
    throw group_spec_error("gl3f2 is not available here");
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw group_spec_error("unknown group spec '" + std::string(spec) + "'");
  const auto family = spec.substr(0, colon);
  const auto n = parse_group_parameter(spec, spec.substr(colon + 1));
  try {
    if (family == "sym") return SymmetricGroup(n);
    if (family == "alt") return AlternatingGroup(n);
    if (family == "sl2") return SL2(n);
    if (family == "psl2") return PSL2(n);
    if constexpr (std::is_constructible_v<Result, CyclicSquare>)
      if (family == "znxzn") return CyclicSquare(n);
  } catch (const group_spec_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw group_spec_error(e.what());
  }
  throw group_spec_error("unknown group family '" + std::string(family) + "'");
}

}  // namespace detail

inline AnyGroup make_group(std::string_view spec) {
  if (spec.starts_with("h4:")) {
    using Base = std::variant<SymmetricGroup, AlternatingGroup, SL2, PSL2>;
    auto base = detail::make_simple_group<Base>(spec.substr(3));
    try {
      return std::visit([](auto&& h) -> AnyGroup { return H4Group<std::decay_t<decltype(h)>>(h); },
                        std::move(base));
    } catch (const std::invalid_argument& e) {
      throw group_spec_error(e.what());
    }
  }
  return detail::make_simple_group<AnyGroup>(spec);
}

}  // namespace belyi

#endif  // BELYI_GROUPS_SPEC_HPP

#ifndef GANZ_PRINTING_HPP
#define GANZ_PRINTING_HPP

#include <string>

namespace ganz {

// Precedence classes of the expression grammar, loosest first.
// A printed fragment carries the class of its outermost construct; callers
// parenthesize when embedding a fragment into a tighter context.
enum class Prec { Sum = 0, Product = 1, Unary = 2, Power = 3, Atom = 4 };

inline std::string wrap_if(const std::string& s, Prec have, Prec need) {
    if (static_cast<int>(have) < static_cast<int>(need)) return "(" + s + ")";
    return s;
}

} // namespace ganz

#endif

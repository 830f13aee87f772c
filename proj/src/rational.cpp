#include "vispoly/rational.hpp"

#include <algorithm>
#include <cctype>

namespace vispoly {

std::optional<Scalar> parse_scalar(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        auto digits_ok = [](const std::string& s, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            return true;
        };
        if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
        Scalar v;
        if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
        if (sgn(v.get_den()) == 0) return std::nullopt;
        v.canonicalize();
        return v;
    }

    // Decimal or plain integer.
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string int_part, frac_part;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) int_part += text[i++];
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac_part += text[i++];
    }
    if (i != text.size()) return std::nullopt;
    if (int_part.empty() && frac_part.empty()) return std::nullopt;

    mpz_class num(int_part.empty() ? std::string("0") : int_part);
    mpz_class den(1);
    for (char c : frac_part) {
        num *= 10;
        num += c - '0';
        den *= 10;
    }
    Scalar v(num, den);
    v.canonicalize();
    if (neg) v = -v;
    return v;
}

std::string format_scalar(const Scalar& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::size_t scalar_bits(const Scalar& v) {
    const std::size_t nb = mpz_sizeinbase(v.get_num().get_mpz_t(), 2);
    const std::size_t db = mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
    return std::max(nb, db);
}

}  // namespace vispoly

#pragma once

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sumquot/ratset.hpp"

namespace sumquot {

// Input grammar: one rational per nonempty line, "p/q" or integer; '#'
// starts a comment; duplicates collapse.  Errors name the offending line.
inline RatSet parse_input_text(const std::string& text) {
    std::vector<Rational> elems;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(first, last - first + 1);
        try {
            elems.push_back(parse_rational(tok));
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return RatSet(std::move(elems));
}

inline RatSet parse_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require_input(in.good(), "cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

inline std::string render_set(const RatSet& a) {
    std::string out;
    for (const auto& r : a) {
        out += r.str();
        out += '\n';
    }
    return out;
}

// SHA-256 of the canonicalized (sorted, reduced) element list, so the same
// set hashes identically regardless of input ordering or representation.
inline std::string input_digest(const RatSet& a) {
    std::string canon = render_set(a);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    int ok = EVP_Digest(canon.data(), canon.size(), md, &len, EVP_sha256(), nullptr);
    require_invariant(ok == 1, "digest computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

} // namespace sumquot

/*
   Copyright 2026 The dpa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dpa/error.hpp"

namespace dpa {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p/q" etc. Throws Parse on junk.
Rat parse_rat(const std::string& s);

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

inline std::size_t hash_rat(const Rat& r) {
    // cheap but stable: fold the limbs of numerator and denominator
    auto fold = [](const mpz_class& z) {
        std::size_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x5bd1e995 : 0;
        std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            h = hash_combine(h, (std::size_t)mpz_getlimbn(z.get_mpz_t(), i));
        return h;
    };
    return hash_combine(fold(r.get_num()), fold(r.get_den()));
}

} // namespace dpa

// SPDX-License-Identifier: Apache-2.0
//
// uavsv: UWB air-to-ground channel modelling toolkit
// Copyright (C) 2026 The uavsv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef UAVSV_TEXT_HPP
#define UAVSV_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uavsv
{
    // Malformed text input. line and column are 1-based; column counts comma-separated fields.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string &what, std::size_t line, std::size_t column = 0);
        std::size_t line() const { return line_; }
        std::size_t column() const { return column_; }

    private:
        std::size_t line_;
        std::size_t column_;
    };

    // File could not be opened, read or written.
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    namespace text
    {
        // All formatting goes through std::to_chars and is locale independent.
        std::string format_shortest(double v);                 // Shortest round-trip form
        std::string format_significant(double v, int digits);  // %.<digits>g equivalent
        std::string format_fixed(double v, int decimals);      // %.<decimals>f equivalent

        std::vector<std::string_view> split(std::string_view line, char sep = ',');
        std::string_view trim(std::string_view s);

        // Parse helpers throw std::invalid_argument on malformed or partial input.
        double parse_double(std::string_view s);
        std::int64_t parse_int(std::string_view s);
        std::uint64_t parse_uint(std::string_view s);

        // 64-bit FNV-1a over raw bytes.
        std::uint64_t fnv1a64(std::string_view bytes);
    }
}

#endif

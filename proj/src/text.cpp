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

#include "uavsv/text.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace uavsv
{
    namespace
    {
        std::string where(std::size_t line, std::size_t column)
        {
            std::string s = "line " + std::to_string(line);
            if (column > 0)
                s += ", column " + std::to_string(column);
            return s;
        }
    }

    ParseError::ParseError(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(where(line, column) + ": " + what), line_(line), column_(column)
    {
    }

    namespace text
    {
        std::string format_shortest(double v)
        {
            if (v == 0.0)
                v = 0.0; // fold -0
            std::array<char, 64> buf{};
            auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
            return std::string(buf.data(), res.ptr);
        }

        std::string format_significant(double v, int digits)
        {
            if (v == 0.0)
                v = 0.0;
            std::array<char, 64> buf{};
            auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits);
            return std::string(buf.data(), res.ptr);
        }

        std::string format_fixed(double v, int decimals)
        {
            std::array<char, 512> buf{};
            auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
            std::string s(buf.data(), res.ptr);
            // "-0.00" reads as a sign error in tables
            if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos)
                s.erase(0, 1);
            return s;
        }

        std::vector<std::string_view> split(std::string_view line, char sep)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const std::size_t pos = line.find(sep, start);
                if (pos == std::string_view::npos)
                {
                    out.push_back(line.substr(start));
                    break;
                }
                out.push_back(line.substr(start, pos - start));
                start = pos + 1;
            }
            return out;
        }

        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        double parse_double(std::string_view s)
        {
            s = trim(s);
            if (!s.empty() && s.front() == '+')
                s.remove_prefix(1);
            double v = 0.0;
            auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
            return v;
        }

        std::int64_t parse_int(std::string_view s)
        {
            s = trim(s);
            std::int64_t v = 0;
            auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
            return v;
        }

        std::uint64_t parse_uint(std::string_view s)
        {
            s = trim(s);
            std::uint64_t v = 0;
            auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
            return v;
        }

        std::uint64_t fnv1a64(std::string_view bytes)
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : bytes)
            {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }
    }
}

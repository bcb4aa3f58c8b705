// Copyright 2026 The typlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "typlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "typlab/errors.hpp"

namespace typlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

std::optional<double> to_double(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

template <class Int>
Int to_uint(std::string_view s, int line, const std::string &key) {
    s = trim(s);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError(line, "'" + key + "' expects a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
}

bool is_preset(std::string_view name) {
    return name == "pauli-x" || name == "pauli-y" || name == "pauli-z" || name == "identity";
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string s = strip_spaces(text);
    auto fail = [&]() -> Complex { throw ValidationError("malformed complex number '" + s + "'"); };
    if (s.empty()) {
        return fail();
    }
    if (s.back() != 'i') {
        auto re = to_double(s);
        return re ? Complex(*re, 0.0) : fail();
    }
    // Split at the last sign that is not the leading one and not an exponent sign.
    std::string_view body(s.data(), s.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    std::string_view re_part = split_at == std::string_view::npos ? std::string_view{} : body.substr(0, split_at);
    std::string_view im_part = split_at == std::string_view::npos ? body : body.substr(split_at);
    double re = 0.0;
    if (!re_part.empty()) {
        auto r = to_double(re_part);
        if (!r) {
            return fail();
        }
        re = *r;
    }
    double im;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        auto v = to_double(im_part);
        if (!v) {
            return fail();
        }
        im = *v;
    }
    return Complex(re, im);
}

ComplexMatrix parse_matrix(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.size() < 4 || s.rfind("[[", 0) != 0 || s.substr(s.size() - 2) != "]]") {
        throw ValidationError("malformed matrix '" + s + "': expected [[a,b],[c,d]]");
    }
    const std::string_view inner(s.data() + 2, s.size() - 4);
    const auto rows = split(inner, "],[");
    const std::size_t n = rows.size();
    std::vector<Complex> data;
    data.reserve(n * n);
    for (const auto &row : rows) {
        const auto entries = split(row, ",");
        if (entries.size() != n) {
            throw ValidationError("malformed matrix '" + s + "': not square");
        }
        for (const auto &e : entries) {
            if (e.find_first_of("[]") != std::string_view::npos) {
                throw ValidationError("malformed matrix '" + s + "'");
            }
            data.push_back(parse_complex(e));
        }
    }
    return ComplexMatrix(n, std::move(data));
}

LocalObservable parse_sigma(std::string_view text, std::size_t d) {
    const std::string name(trim(text));
    if (name == "identity") {
        return LocalObservable::identity(d);
    }
    if (is_preset(name)) {
        if (d != 2) {
            throw ValidationError("preset '" + name + "' is a qubit operator but d=" + std::to_string(d));
        }
        return LocalObservable::preset(name);
    }
    if (!name.empty() && name.front() == '[') {
        ComplexMatrix m = parse_matrix(name);
        if (m.dim() != d) {
            throw ValidationError("sigma is " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) +
                                  " but d=" + std::to_string(d));
        }
        return LocalObservable(HermitianMatrix(std::move(m)), name);
    }
    throw ValidationError("unknown observable '" + name + "'");
}

ExperimentConfig parse_config(std::string_view text, const ExperimentConfig &base) {
    ExperimentConfig cfg = base;
    int line_no = 0;
    int n_line = 0;
    int divisor_line = 0;
    int d_line = 0;
    int sigma_line = 0;
    bool d_given = false;
    bool sigma_given = false;

    for (std::string_view raw : split(text, "\n")) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(line_no, "expected key=value, got '" + std::string(line) + "'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "mode") {
            try {
                cfg.mode = parse_mode(std::string(value));
            } catch (const ValidationError &e) {
                throw ConfigError(line_no, e.what());
            }
        } else if (key == "n") {
            cfg.n_values.clear();
            for (auto part : split(value, ",")) {
                cfg.n_values.push_back(to_uint<std::size_t>(part, line_no, key));
            }
            n_line = line_no;
        } else if (key == "k") {
            cfg.k = to_uint<std::size_t>(value, line_no, key);
            divisor_line = line_no;
        } else if (key == "nb") {
            cfg.n_b = to_uint<std::size_t>(value, line_no, key);
            divisor_line = line_no;
        } else if (key == "d") {
            cfg.d = to_uint<std::size_t>(value, line_no, key);
            d_line = line_no;
            d_given = true;
        } else if (key == "sigma") {
            cfg.sigma_text = std::string(value);
            sigma_line = line_no;
            sigma_given = true;
        } else if (key == "samples" || key == "m") {
            cfg.samples = to_uint<std::uint64_t>(value, line_no, key);
            if (cfg.samples < 2) {
                throw ConfigError(line_no, "samples must be >= 2");
            }
        } else if (key == "seed") {
            cfg.seed = to_uint<std::uint64_t>(value, line_no, key);
        } else if (key == "workers") {
            cfg.workers = to_uint<unsigned>(value, line_no, key);
        } else {
            throw ConfigError(line_no, "unknown key '" + key + "'");
        }
    }

    if (d_given && cfg.d < 2) {
        throw ConfigError(d_line, "d must be >= 2");
    }
    if (sigma_given || d_given) {
        // A matrix literal fixes d unless d was given explicitly.
        if (sigma_given && !d_given && !cfg.sigma_text.empty() && cfg.sigma_text.front() == '[') {
            try {
                cfg.d = parse_matrix(cfg.sigma_text).dim();
            } catch (const ValidationError &e) {
                throw ConfigError(sigma_line, e.what());
            }
        }
        try {
            cfg.sigma = parse_sigma(cfg.sigma_text, cfg.d);
        } catch (const ValidationError &e) {
            throw ConfigError(sigma_given ? sigma_line : d_line, e.what());
        }
    }

    if (!cfg.n_values.empty()) {
        try {
            validate(cfg);
        } catch (const ValidationError &e) {
            throw ConfigError(std::max(n_line, divisor_line), e.what());
        }
    }
    return cfg;
}

std::string config_to_text(const ExperimentConfig &config) {
    std::string out = "mode=" + mode_name(config.mode) + "\n";
    out += "n=";
    for (std::size_t i = 0; i < config.n_values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(config.n_values[i]);
    }
    out += "\n";
    if (config.mode == Mode::FixedK) {
        out += "k=" + std::to_string(config.k) + "\n";
    } else if (config.mode == Mode::FixedNB) {
        out += "nb=" + std::to_string(config.n_b) + "\n";
    }
    out += "d=" + std::to_string(config.d) + "\n";
    out += "sigma=" + config.sigma_text + "\n";
    out += "samples=" + std::to_string(config.samples) + "\n";
    out += "seed=" + std::to_string(config.seed) + "\n";
    return out;
}

}  // namespace typlab

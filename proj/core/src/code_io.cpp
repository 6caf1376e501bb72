// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/code_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace agtrellis {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + reason);
}

} // namespace

void write_code(std::ostream& os, const LinearCode& code) {
    const Field& f = *code.field();
    os << "field " << f.characteristic() << " " << f.degree();
    for (unsigned c : f.modulus()) os << " " << c;
    os << "\n";
    os << "code " << code.dimension() << " " << code.length() << "\n";
    const Matrix& g = code.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c) os << " ";
            os << g(r, c);
        }
        os << "\n";
    }
}

std::string code_to_string(const LinearCode& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

LinearCode read_code(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](const char* what) {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        }
        parse_fail(lineno + 1, std::string("expected ") + what);
    };

    next_line("field header");
    std::istringstream head(line);
    std::string tag;
    unsigned p = 0, m = 0;
    if (!(head >> tag >> p >> m) || tag != "field")
        parse_fail(lineno, "expected 'field p m c0 ... cm'");
    std::vector<unsigned> modulus;
    unsigned coeff;
    while (head >> coeff) modulus.push_back(coeff);
    if (modulus.size() != m + 1)
        parse_fail(lineno, "modulus needs m+1 coefficients");
    FieldPtr field;
    try {
        field = Field::make(p, m, modulus);
    } catch (const Error& e) {
        parse_fail(lineno, e.what());
    }

    next_line("code header");
    std::istringstream dims(line);
    std::size_t k = 0, n = 0;
    if (!(dims >> tag >> k >> n) || tag != "code")
        parse_fail(lineno, "expected 'code k n'");
    if (k < 1 || n < 1 || k > n) parse_fail(lineno, "need 1 <= k <= n");

    Matrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        next_line("generator row");
        std::istringstream row(line);
        for (std::size_t c = 0; c < n; ++c) {
            long v = -1;
            if (!(row >> v)) parse_fail(lineno, "row needs n element indices");
            if (v < 0 || v >= static_cast<long>(field->order()))
                parse_fail(lineno, "element index " + std::to_string(v) +
                                       " outside [0, q)");
            g(r, c) = static_cast<felem>(v);
        }
        long extra;
        if (row >> extra) parse_fail(lineno, "trailing entries beyond n columns");
    }
    try {
        return LinearCode::from_generator(g);
    } catch (const Error& e) {
        parse_fail(lineno, e.what());
    }
}

LinearCode code_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_code(is);
}

LinearCode load_code(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(Errc::ParseError, "cannot open " + path.string());
    return read_code(is);
}

void save_code(const std::filesystem::path& path, const LinearCode& code) {
    std::ofstream os(path);
    if (!os) throw Error(Errc::ParseError, "cannot write " + path.string());
    write_code(os, code);
}

std::string gonality_to_json(const GonalitySequence& gs) {
    nlohmann::ordered_json j;
    j["genus"] = gs.genus();
    j["origin"] = origin_name(gs.origin());
    if (auto r = gs.plane_degree_param()) j["plane_r"] = *r;
    j["gammas"] = gs.values();
    return j.dump(2) + "\n";
}

GonalitySequence gonality_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    try {
        std::string origin = j.value("origin", "explicit");
        if (origin == "plane" && j.contains("plane_r"))
            return GonalitySequence::plane(j["plane_r"].get<int>());
        if (origin == "hyperelliptic")
            return GonalitySequence::hyperelliptic(j["genus"].get<int>());
        return GonalitySequence::from_values(j["genus"].get<int>(),
                                             j["gammas"].get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

GonalitySequence load_gonality(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(Errc::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << is.rdbuf();
    return gonality_from_json(buf.str());
}

} // namespace agtrellis

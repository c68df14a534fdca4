#include "partdist/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace partdist {

std::string column_string(const std::vector<int>& values)
{
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(values[k]);
    }
    return out + ")'";
}

nlohmann::json to_json(const Rational& r)
{
    return r.to_string();
}

nlohmann::json to_json(const BigInt& value)
{
    return value.get_str();
}

nlohmann::json to_json(const std::vector<Rational>& values)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : values) {
        out.push_back(v.to_string());
    }
    return out;
}

nlohmann::json to_json(const RationalMatrix& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).to_string());
        }
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json to_json(const Partition& p)
{
    return p.parts();
}

Partition partition_from_json(const nlohmann::json& j)
{
    return Partition(j.get<std::vector<int>>());
}

std::string decimal_string(double value)
{
    if (!std::isfinite(value)) {
        return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

nlohmann::json decimal_json(double value)
{
    if (!std::isfinite(value)) {
        return nullptr;
    }
    return std::strtod(decimal_string(value).c_str(), nullptr);
}

std::string pretty_matrix(const RationalMatrix& m, const std::string& indent)
{
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            width[c] = std::max(width[c], m(r, c).to_string().size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string cell = m(r, c).to_string();
            out << (c > 0 ? "  " : "") << std::string(width[c] - cell.size(), ' ') << cell;
        }
        out << "]\n";
    }
    return out.str();
}

} // namespace partdist

#include "ffcs/serialization.hpp"

#include <string>

#include "ffcs/errors.hpp"

namespace ffcs {

using nlohmann::json;

namespace {

json seed_json(std::optional<std::uint64_t> seed) {
  return seed ? json(*seed) : json(nullptr);
}

Element checked_entry(const json& v, int q) {
  if (!v.is_number_integer()) throw InvalidParameter("entries must be integers");
  const auto e = v.get<long long>();
  if (e < 0 || e >= q) {
    throw InvalidParameter("entry " + std::to_string(e) + " outside GF(" + std::to_string(q) + ")");
  }
  return static_cast<Element>(e);
}

}  // namespace

json to_json(const SensingMatrix& A, std::optional<std::uint64_t> seed) {
  json rows = json::array();
  for (int i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.cols(); ++j) row.push_back(static_cast<int>(A.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"q", A.q},
          {"dims", {A.rows(), A.cols()}},
          {"entries", std::move(rows)},
          {"gamma", A.gamma},
          {"seed", seed_json(seed)}};
}

json to_json(int q, const Signal& x, std::optional<std::uint64_t> seed) {
  json entries = json::array();
  for (int i = 0; i < x.size(); ++i) entries.push_back(static_cast<int>(x[i]));
  return {{"q", q},
          {"dims", {x.size()}},
          {"entries", std::move(entries)},
          {"gamma", nullptr},
          {"seed", seed_json(seed)}};
}

SensingMatrix matrix_from_json(const json& j) {
  try {
    SensingMatrix A;
    A.q = j.at("q").get<int>();
    A.gamma = j.at("gamma").get<double>();
    const auto dims = j.at("dims").get<std::vector<int>>();
    if (dims.size() != 2 || dims[0] < 0 || dims[1] < 0) {
      throw InvalidParameter("matrix dims must be [M, N]");
    }
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != dims[0]) {
      throw InvalidParameter("matrix row count does not match dims");
    }
    A.entries.resize(dims[0], dims[1]);
    for (int r = 0; r < dims[0]; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dims[1]) {
        throw InvalidParameter("matrix row length does not match dims");
      }
      for (int c = 0; c < dims[1]; ++c) A.entries(r, c) = checked_entry(rows[r][c], A.q);
    }
    return A;
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("malformed matrix JSON: ") + e.what());
  }
}

Signal signal_from_json(const json& j) {
  try {
    const int q = j.at("q").get<int>();
    const auto dims = j.at("dims").get<std::vector<int>>();
    const auto& entries = j.at("entries");
    if (dims.size() != 1 || !entries.is_array() ||
        static_cast<int>(entries.size()) != dims[0]) {
      throw InvalidParameter("signal dims must be [N] matching entries");
    }
    ElementVector v(dims[0]);
    for (int i = 0; i < dims[0]; ++i) v[i] = checked_entry(entries[i], q);
    return Signal(std::move(v));
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("malformed signal JSON: ") + e.what());
  }
}

}  // namespace ffcs

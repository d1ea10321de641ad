#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldseq/discrepancy.hpp"
#include "ldseq/errors.hpp"
#include "ldseq/greedy.hpp"
#include "ldseq/point_set.hpp"
#include "ldseq/version.hpp"

namespace ldseq {

// Shortest decimal form that round-trips the double exactly.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[40];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      std::sscanf(shorter, "%lf", &back);
      if (back == v) return shorter;
    }
  }
  return buf;
}

// Points CSV: header `index,x1[,x2,...]`, one row per point in sequence
// order, coordinates printed so they round-trip exactly.
inline std::string points_to_csv(const PointSet& pts) {
  std::ostringstream out;
  out << "index";
  for (std::size_t j = 1; j <= pts.dim(); ++j) out << ",x" << j;
  out << "\n";
  for (std::size_t i = 0; i < pts.count(); ++i) {
    out << (i + 1);
    auto p = pts.point(i);
    for (double c : p) out << "," << format_double(c);
    out << "\n";
  }
  return out.str();
}

inline void write_points_csv(const std::string& path, const PointSet& pts) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << points_to_csv(pts);
}

inline PointSet points_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedInput("empty points file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t dim = 0;
  {
    std::stringstream hdr(line);
    std::string cell;
    if (!std::getline(hdr, cell, ',') || cell != "index")
      throw MalformedInput("points CSV must start with an `index` header");
    while (std::getline(hdr, cell, ',')) {
      if (cell != "x" + std::to_string(dim + 1))
        throw MalformedInput("unexpected header column: " + cell);
      ++dim;
    }
  }
  if (dim == 0) throw MalformedInput("points CSV has no coordinate columns");

  PointSet pts(dim);
  std::vector<double> coords(dim);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    std::stringstream ss(line);
    std::string cell;
    if (!std::getline(ss, cell, ','))
      throw MalformedInput("short row " + std::to_string(row));
    for (std::size_t j = 0; j < dim; ++j) {
      if (!std::getline(ss, cell, ','))
        throw MalformedInput("short row " + std::to_string(row));
      try {
        std::size_t pos = 0;
        coords[j] = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw MalformedInput("bad number `" + cell + "` in row " + std::to_string(row));
      }
    }
    if (std::getline(ss, cell, ','))
      throw MalformedInput("extra cells in row " + std::to_string(row));
    try {
      pts.append(std::span<const double>(coords.data(), coords.size()));
    } catch (const Error& e) {
      throw MalformedInput(std::string(e.what()) + " in row " + std::to_string(row));
    }
  }
  if (pts.count() == 0) throw MalformedInput("points file has no rows");
  return pts;
}

inline PointSet read_points_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw MalformedInput("cannot open points file: " + path);
  return points_from_csv(f);
}

inline nlohmann::json report_to_json(const DiscrepancyReport& rep) {
  return {
      {"value", rep.value},
      {"n", rep.n},
      {"dim", rep.dim},
      {"witness",
       {{"corner", rep.witness.corner},
        {"mode", rep.witness.mode == CountMode::Closed ? "closed" : "open"}}},
  };
}

inline nlohmann::json step_to_json(const StepRecord& rec) {
  nlohmann::json j{
      {"type", "step"},
      {"step", rec.step},
      {"point", rec.point},
      {"energy", rec.energy},
      {"min_distance", rec.min_distance},
      {"evaluations", rec.evaluations},
  };
  if (!rec.lemma3_sums.empty()) {
    nlohmann::json sums = nlohmann::json::object();
    for (const auto& [mult, value] : rec.lemma3_sums)
      sums[std::to_string(mult)] = value;
    j["lemma3"] = sums;
  }
  if (rec.theorem3_value) j["theorem3"] = *rec.theorem3_value;
  return j;
}

// Full provenance of one CLI invocation; written next to (or at the head
// of) every output so a run can be reproduced from its artifacts alone.
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::string version = kVersion;
  std::string timestamp;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const {
    return {{"type", "manifest"}, {"command", command},     {"config", config},
            {"version", version}, {"timestamp", timestamp}, {"outputs", outputs}};
  }
};

// Steps JSONL layout: manifest line, one line per initial point, then one
// line per constructed step.
inline void write_steps_jsonl(const std::string& path, const RunManifest& manifest,
                              const PointSet& initial,
                              const std::vector<StepRecord>& records) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << manifest.to_json().dump() << "\n";
  for (std::size_t i = 0; i < initial.count(); ++i) {
    auto p = initial.point(i);
    f << nlohmann::json{{"type", "initial"},
                        {"step", i + 1},
                        {"point", std::vector<double>(p.begin(), p.end())}}
             .dump()
      << "\n";
  }
  for (const auto& rec : records) f << step_to_json(rec).dump() << "\n";
}

struct StepsFile {
  std::optional<nlohmann::json> manifest;
  PointSet sequence{1};
  std::vector<StepRecord> records;
  std::size_t initial_count = 0;
};

inline StepsFile read_steps_jsonl(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw MalformedInput("cannot open steps file: " + path);
  StepsFile out;
  std::string line;
  bool dim_known = false;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedInput("steps line " + std::to_string(lineno) + ": " + e.what());
    }
    const std::string type = j.value("type", "step");
    if (type == "manifest") {
      out.manifest = j;
      continue;
    }
    std::vector<double> p = j.at("point").get<std::vector<double>>();
    if (!dim_known) {
      out.sequence = PointSet(p.size());
      dim_known = true;
    }
    out.sequence.append(std::span<const double>(p.data(), p.size()));
    if (type == "initial") {
      ++out.initial_count;
      continue;
    }
    StepRecord rec;
    rec.step = j.value("step", out.sequence.count());
    rec.point = std::move(p);
    rec.energy = j.value("energy", 0.0);
    rec.min_distance = j.value("min_distance", 0.0);
    rec.evaluations = j.value("evaluations", std::size_t{0});
    if (j.contains("lemma3"))
      for (const auto& [key, value] : j.at("lemma3").items())
        rec.lemma3_sums[std::stoi(key)] = value.get<double>();
    if (j.contains("theorem3")) rec.theorem3_value = j.at("theorem3").get<double>();
    out.records.push_back(std::move(rec));
  }
  if (out.sequence.count() == 0) throw MalformedInput("steps file has no points");
  return out;
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << j.dump(2) << "\n";
}

}  // namespace ldseq

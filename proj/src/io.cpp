#include "semibound/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semibound {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ProbDist load_spectrum(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<double> values;
  const std::size_t first =
      text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array())
      throw std::runtime_error("spectrum file: expected a JSON array: " + path);
    for (const auto& v : j) values.push_back(v.get<double>());
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      double v;
      if (ls >> v) values.push_back(v);
      std::string rest;
      if (ls >> rest)
        throw std::runtime_error("spectrum file: one number per line: " + path);
    }
  }
  if (values.empty())
    throw std::runtime_error("spectrum file: no entries: " + path);
  return sort_desc(ProbDist(std::move(values)));
}

EnergySequence load_energy_sequence(const std::string& spec) {
  if (spec == "oscillator") return EnergySequence::oscillator();
  const nlohmann::json j = nlohmann::json::parse(read_file(spec));
  if (!j.is_object() || !j.contains("prefix") || !j.contains("step"))
    throw std::runtime_error(
        "energy sequence file: expected { \"prefix\": [...], \"step\": s }: " +
        spec);
  std::vector<double> prefix;
  for (const auto& v : j.at("prefix")) prefix.push_back(v.get<double>());
  return EnergySequence(std::move(prefix), j.at("step").get<double>(), spec);
}

std::string format_sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace semibound

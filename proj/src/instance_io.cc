// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parbasis/instance_io.h"

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "parbasis/errors.h"

namespace parbasis {
namespace {

// Next non-blank, non-comment line; false at end of input.
bool NextLine(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void Fail(std::size_t line_no, const std::string& message) {
  throw InputError("instance line " + std::to_string(line_no) + ": " +
                   message);
}

GraphicInstance ParseEdges(std::istream& in, std::size_t& line_no,
                           std::size_t m, std::uint64_t n) {
  GraphicInstance graph;
  graph.num_vertices = static_cast<std::uint32_t>(n);
  graph.edges.reserve(m);
  std::string line;
  for (std::size_t i = 0; i < m; ++i) {
    if (!NextLine(in, line, line_no)) Fail(line_no, "expected more edges");
    std::istringstream fields(line);
    std::int64_t u = -1;
    std::int64_t v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      Fail(line_no, "expected 'u v'");
    }
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= n ||
        static_cast<std::uint64_t>(v) >= n) {
      Fail(line_no, "vertex id out of range");
    }
    graph.edges.push_back(
        {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  return graph;
}

}  // namespace

MatroidInstance ParseInstance(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  if (!NextLine(in, line, line_no)) throw InputError("empty instance");
  std::istringstream header(line);
  std::string kind;
  std::int64_t m = -1;
  std::int64_t second = -1;
  std::string extra;
  if (!(header >> kind >> m >> second) || (header >> extra) || m < 0 ||
      second < 0) {
    Fail(line_no, "expected '<kind> m n' header");
  }
  MatroidInstance instance = [&]() -> MatroidInstance {
    if (kind == "graphic") {
      return MatroidInstance(ParseEdges(in, line_no, m, second));
    }
    if (kind == "cographic") {
      return MatroidInstance(
          CographicInstance{ParseEdges(in, line_no, m, second)});
    }
    if (kind == "binary") {
      BinaryInstance binary;
      binary.dimension = static_cast<std::size_t>(second);
      for (std::int64_t i = 0; i < m; ++i) {
        if (!NextLine(in, line, line_no)) Fail(line_no, "expected a column");
        std::istringstream fields(line);
        std::string hex;
        fields >> hex;
        if (fields >> extra) Fail(line_no, "expected one hex column");
        try {
          binary.columns.push_back(Gf2Vector::FromHex(hex, binary.dimension));
        } catch (const InputError& e) {
          Fail(line_no, e.what());
        }
      }
      return MatroidInstance(std::move(binary));
    }
    Fail(line_no, "unknown instance kind '" + kind + "'");
  }();
  if (NextLine(in, line, line_no)) Fail(line_no, "trailing content");
  return instance;
}

MatroidInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  return ParseInstance(in);
}

std::string FormatInstance(const MatroidInstance& instance) {
  std::ostringstream out;
  auto write_edges = [&](const GraphicInstance& g) {
    out << g.edges.size() << ' ' << g.num_vertices << '\n';
    for (const Edge& e : g.edges) out << e.u << ' ' << e.v << '\n';
  };
  switch (instance.kind()) {
    case MatroidKind::kGraphic:
      out << "graphic ";
      write_edges(instance.graphic());
      break;
    case MatroidKind::kCographic:
      out << "cographic ";
      write_edges(instance.cographic().graph);
      break;
    case MatroidKind::kBinary: {
      const BinaryInstance& b = instance.binary();
      out << "binary " << b.columns.size() << ' ' << b.dimension << '\n';
      for (const Gf2Vector& c : b.columns) out << c.ToHex() << '\n';
      break;
    }
  }
  return out.str();
}

void WriteFileAtomically(const std::string& path, const std::string& contents) {
  WriteFileAtomically(path, [&](std::ostream& out) { out << contents; });
}

void WriteFileAtomically(const std::string& path,
                         const std::function<void(std::ostream&)>& write) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    try {
      write(out);
    } catch (...) {
      out.close();
      fs::remove(tmp);
      throw;
    }
    if (!out.flush()) throw InputError("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace parbasis

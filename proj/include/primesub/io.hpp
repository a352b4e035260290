#pragma once

// JSON documents for complexes, subcomplexes and Čech data, and the
// structured reports emitted by the command-line tool.

#include "primesub/audit.hpp"
#include "primesub/cech.hpp"
#include "primesub/complex.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace primesub {

using Json = nlohmann::ordered_json;

/// Malformed document; `path` points into it, e.g. "/modules/0/invariants/1".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, std::string reason)
      : std::runtime_error(path + ": " + reason), path_(std::move(path)), reason_(std::move(reason)) {}
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

/// Well-formed document describing an invalid object (d² ≠ 0, a map that is
/// not well defined, or a subcomplex not closed under d) at degree `index`.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string what, long index, std::string path)
      : std::runtime_error(std::move(what)), index_(index), path_(std::move(path)) {}
  long index() const { return index_; }
  const std::string& path() const { return path_; }

 private:
  long index_;
  std::string path_;
};

struct CechDocument {
  CechComplex complex;
  std::optional<std::vector<IdealSubcomplexPart>> parts;
};

/// A parsed input. A complex document may carry a subcomplex and an
/// "avoid" family; a Čech document replaces the complex.
struct Document {
  std::optional<Complex> complex;
  std::optional<Subcomplex> subcomplex;
  std::vector<Subcomplex> family;
  std::optional<CechDocument> cech;
};

Document parseDocument(const std::string& text, std::uint64_t factorCap = kDefaultFactorCap);
Document parseDocumentJson(const Json& doc, std::uint64_t factorCap = kDefaultFactorCap);

Json serializeComplex(const Complex& C);
Json serializeSubcomplex(const Subcomplex& S);
Json serializeDocument(const Document& doc);

Json elementJson(const Vector& v);
Json idealsJson(const std::map<long, Ideal>& ideals);
Json witnessJson(const std::optional<Witness>& w);
Json auditJson(const AuditReport& report);

/// Report skeleton with the fixed field order command, verdict, ideals,
/// witness, timing.
Json makeReport(const std::string& command, const std::string& verdict);
/// Human-readable rendering of a structured report.
std::string renderHuman(const Json& report);

}  // namespace primesub

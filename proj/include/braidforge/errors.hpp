#ifndef BRAIDFORGE_ERRORS_HPP
#define BRAIDFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidforge {

// All library errors carry a stable kind name so the CLI can surface it
// without string-matching what() messages.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t position)
      : Error("SyntaxError", msg), pos(position) {}
  std::size_t pos;
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& name)
      : Error("UnknownGenerator", "unknown generator '" + name + "'"),
        generator(name) {}
  std::string generator;
};

struct GeneratorNotFound : Error {
  explicit GeneratorNotFound(const std::string& name)
      : Error("GeneratorNotFound", "generator '" + name + "' not in presentation") {}
};

struct ExponentOverflow : Error {
  ExponentOverflow() : Error("ExponentOverflow", "word exponent overflow") {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error("IndexOutOfRange", msg) {}
};

struct WrongStrandCount : Error {
  explicit WrongStrandCount(const std::string& msg) : Error("WrongStrandCount", msg) {}
};

struct MalformedWord : Error {
  explicit MalformedWord(const std::string& msg) : Error("MalformedWord", msg) {}
};

struct IncompleteTable : Error {
  IncompleteTable() : Error("IncompleteTable", "coset table is not complete") {}
};

struct NotInSubgroup : Error {
  explicit NotInSubgroup(const std::string& msg) : Error("NotInSubgroup", msg) {}
};

struct NoApplicableOracle : Error {
  NoApplicableOracle() : Error("NoApplicableOracle", "no oracle accepts these words") {}
};

struct SphereNotSupported : Error {
  SphereNotSupported()
      : Error("SphereNotSupported", "the Goldberg projection needs g + p > 0") {}
};

}  // namespace braidforge

#endif

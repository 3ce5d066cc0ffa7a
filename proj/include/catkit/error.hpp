#pragma once

#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

namespace catkit {

struct CatError : std::runtime_error {
  explicit CatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainMismatch : CatError {
  explicit DomainMismatch(const std::string& msg) : CatError(msg) {}
};

struct NotBijective : CatError {
  explicit NotBijective(const std::string& msg) : CatError(msg) {}
};

struct EnumerationTooLarge : CatError {
  long long count;
  long long limit;
  EnumerationTooLarge(long long count_, long long limit_)
      : CatError("enumeration too large: " + std::to_string(count_) +
                 " exceeds guard limit " + std::to_string(limit_)),
        count(count_),
        limit(limit_) {}
};

struct NotUnivalent : CatError {
  explicit NotUnivalent(const std::string& msg) : CatError(msg) {}
};

struct NotAnIso : CatError {
  explicit NotAnIso(const std::string& msg) : CatError(msg) {}
};

struct NotReflexive : CatError {
  int witness;
  explicit NotReflexive(int a)
      : CatError("relation not reflexive at element " + std::to_string(a)),
        witness(a) {}
};

struct NotTransitive : CatError {
  int a, b, c;
  NotTransitive(int a_, int b_, int c_)
      : CatError("relation not transitive: " + std::to_string(a_) + "<=" +
                 std::to_string(b_) + "<=" + std::to_string(c_) +
                 " but not " + std::to_string(a_) + "<=" + std::to_string(c_)),
        a(a_), b(b_), c(c_) {}
};

struct NotANatIso : CatError {
  explicit NotANatIso(const std::string& msg) : CatError(msg) {}
};

struct NotFullyFaithful : CatError {
  explicit NotFullyFaithful(const std::string& msg) : CatError(msg) {}
};

struct NotEssentiallySurjective : CatError {
  std::vector<int> unreachable;
  explicit NotEssentiallySurjective(std::vector<int> objs)
      : CatError("no essential-surjectivity witness; unreachable objects: " +
                 join(objs)),
        unreachable(std::move(objs)) {}

 private:
  static std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  }
};

// A per-object witness exists but cannot be upgraded to functorial data:
// some codomain path has no idtoiso-preimage under the candidate inverse.
struct NotSplitEssentiallySurjective : CatError {
  explicit NotSplitEssentiallySurjective(const std::string& msg)
      : CatError(msg) {}
};

struct InvalidInput : CatError {
  explicit InvalidInput(const std::string& msg) : CatError(msg) {}
};

// Global guard limit shared by every enumerator.  Counts candidate items
// visited, not just yielded, so degenerate searches also terminate.
inline std::atomic<long long>& guard_cell() {
  static std::atomic<long long> limit{1'000'000};
  return limit;
}

inline long long guard_limit() { return guard_cell().load(); }
inline void set_guard_limit(long long limit) { guard_cell().store(limit); }

// Temporarily overrides the global guard limit.
class GuardScope {
 public:
  explicit GuardScope(long long limit) : saved_(guard_limit()) {
    set_guard_limit(limit);
  }
  ~GuardScope() { set_guard_limit(saved_); }
  GuardScope(const GuardScope&) = delete;
  GuardScope& operator=(const GuardScope&) = delete;

 private:
  long long saved_;
};

// Counts enumeration steps against the guard and throws once exceeded.
class GuardCounter {
 public:
  GuardCounter() : limit_(guard_limit()) {}
  explicit GuardCounter(long long limit) : limit_(limit) {}

  void tick(long long steps = 1) {
    count_ += steps;
    if (count_ > limit_) throw EnumerationTooLarge(count_, limit_);
  }

  long long count() const { return count_; }

 private:
  long long count_ = 0;
  long long limit_;
};

}  // namespace catkit

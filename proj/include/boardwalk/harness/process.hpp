#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <sys/types.h>
#include <vector>

namespace boardwalk::harness {

class SpawnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A child process with line-oriented pipes on stdin/stdout. stderr is
/// inherited. The child is killed and reaped on destruction.
class Subprocess {
 public:
  /// Throws SpawnError if the pipes or the fork fail. A command that cannot
  /// be executed shows up as an immediate EOF on stdout.
  explicit Subprocess(const std::vector<std::string>& argv);
  ~Subprocess();
  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;

  /// False once the child has closed its stdin.
  bool write_line(const std::string& line);

  enum class ReadStatus { line, eof, timeout };
  /// Reads one '\n'-terminated line (without the terminator, '\r' stripped).
  ReadStatus read_line(std::string& line, std::chrono::milliseconds timeout);

  void kill();
  pid_t pid() const { return pid_; }

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool eof_ = false;
};

}  // namespace boardwalk::harness

#include "bbt/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <cstring>

namespace bbt {

namespace {

struct Exchange {
  int input = 0;
  pid_t pid = -1;
  int out_fd = -1;
  std::string buffer;
  bool completed = false;
  bool dead = false;  // child gone without a full answer; stays pending

  void close_child() {
    if (out_fd >= 0) {
      close(out_fd);
      out_fd = -1;
    }
    if (pid > 0) {
      kill(pid, SIGKILL);
      waitpid(pid, nullptr, 0);
      pid = -1;
    }
  }
};

class SubprocessEnumerator : public Enumerator {
 public:
  explicit SubprocessEnumerator(SubprocessConfig config)
      : config_(std::move(config)) {
    if (config_.command.empty())
      throw SpawnFailure("empty command");
    exchanges_.resize(config_.inputs.size());
    for (std::size_t i = 0; i < config_.inputs.size(); ++i)
      exchanges_[i].input = config_.inputs[i];
  }

  ~SubprocessEnumerator() override {
    for (auto& e : exchanges_) e.close_child();
  }

  StepResult step() override {
    const std::size_t n = exchanges_.size();
    if (n == 0) return StepResult::exhausted();
    // Round-robin: find the next exchange that still needs attention.
    for (std::size_t scanned = 0; scanned < n; ++scanned) {
      Exchange& e = exchanges_[next_];
      next_ = (next_ + 1) % n;
      if (e.completed || e.dead) continue;
      return advance(e);
    }
    // Everything either answered or died. Only a fully answered schedule
    // exhausts; dead exchanges keep the enumerator pending forever.
    for (const auto& e : exchanges_)
      if (e.dead) return StepResult::working();
    return StepResult::exhausted();
  }

  std::string id() const override { return "subprocess"; }

 private:
  StepResult advance(Exchange& e) {
    if (e.pid < 0) spawn(e);
    struct pollfd pfd{e.out_fd, POLLIN, 0};
    const int rc = poll(&pfd, 1, config_.quantum_ms);
    if (rc <= 0) return StepResult::working();  // quantum elapsed

    char chunk[256];
    const ssize_t got = read(e.out_fd, chunk, sizeof chunk);
    if (got <= 0) {
      // EOF: the child is exiting but may not be reapable yet; give it a
      // moment so an exec failure's status 127 is not lost to the race.
      int status = 0;
      pid_t reaped = 0;
      for (int spin = 0; spin < 100 && e.pid > 0; ++spin) {
        reaped = waitpid(e.pid, &status, WNOHANG);
        if (reaped != 0) break;
        struct timespec ts{0, 1000000};  // 1 ms
        nanosleep(&ts, nullptr);
      }
      if (reaped == e.pid) {
        e.pid = -1;
        if (WIFEXITED(status) && WEXITSTATUS(status) == 127)
          throw SpawnFailure("could not execute " + config_.command[0]);
      }
      e.dead = true;
      e.close_child();
      return StepResult::working();
    }
    e.buffer.append(chunk, static_cast<std::size_t>(got));
    const auto nl = e.buffer.find('\n');
    if (nl == std::string::npos) return StepResult::working();

    const std::string line = e.buffer.substr(0, nl);
    int output = parse_output(line);
    e.completed = true;
    e.close_child();
    return StepResult::yielded("{(" + std::to_string(e.input) + "," +
                               std::to_string(output) + ")}");
  }

  int parse_output(const std::string& line) {
    if (line.empty()) throw ProtocolViolation("empty output line");
    std::size_t k = 0;
    if (line[0] == '-') k = 1;
    if (k == line.size()) throw ProtocolViolation("malformed output: " + line);
    for (; k < line.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(line[k])))
        throw ProtocolViolation("non-numeric output line: " + line);
    return std::stoi(line);
  }

  void spawn(Exchange& e) {
    // A child that exits before reading its input must not kill us with
    // SIGPIPE on the write below; the EOF on its stdout reports it.
    signal(SIGPIPE, SIG_IGN);
    int in_pipe[2], out_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0)
      throw SpawnFailure(std::strerror(errno));
    const pid_t pid = fork();
    if (pid < 0) throw SpawnFailure(std::strerror(errno));
    if (pid == 0) {
      dup2(in_pipe[0], STDIN_FILENO);
      dup2(out_pipe[1], STDOUT_FILENO);
      close(in_pipe[0]);
      close(in_pipe[1]);
      close(out_pipe[0]);
      close(out_pipe[1]);
      std::vector<char*> argv;
      for (auto& a : config_.command) argv.push_back(a.data());
      argv.push_back(nullptr);
      execvp(argv[0], argv.data());
      _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    const std::string line = std::to_string(e.input) + "\n";
    if (write(in_pipe[1], line.data(), line.size()) < 0) {
      // Child may have exited immediately; the read side will notice.
    }
    close(in_pipe[1]);
    fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
    e.pid = pid;
    e.out_fd = out_pipe[0];
  }

  SubprocessConfig config_;
  std::vector<Exchange> exchanges_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<Enumerator> subprocess_enumerator(SubprocessConfig config) {
  return std::make_unique<SubprocessEnumerator>(std::move(config));
}

}  // namespace bbt

#include "fairclear/backend.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>

namespace fairclear {

namespace {

std::vector<std::string> splitWhitespace(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool loadBackendConfig(const std::string& path, BackendConfig& cfg,
                       std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            error = "config line " + std::to_string(lineNo) + ": expected key=value";
            return false;
        }
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key == "backend.name")
            cfg.exe = val;
        else if (key == "backend.args")
            cfg.args = splitWhitespace(val);
        else if (key == "backend.true_pattern")
            cfg.truePattern = val;
        else if (key == "backend.false_pattern")
            cfg.falsePattern = val;
        else {
            error = "config line " + std::to_string(lineNo) + ": unknown key " + key;
            return false;
        }
    }
    return true;
}

BackendResult runBackend(const BackendConfig& cfg, const std::string& input,
                         int timeoutSeconds) {
    BackendResult res;
    int inPipe[2], outPipe[2];
    if (pipe(inPipe) != 0) return res;
    if (pipe(outPipe) != 0) {
        close(inPipe[0]);
        close(inPipe[1]);
        return res;
    }
    pid_t pid = fork();
    if (pid < 0) {
        for (int fd : {inPipe[0], inPipe[1], outPipe[0], outPipe[1]}) close(fd);
        return res;
    }
    if (pid == 0) {
        dup2(inPipe[0], STDIN_FILENO);
        dup2(outPipe[1], STDOUT_FILENO);
        for (int fd : {inPipe[0], inPipe[1], outPipe[0], outPipe[1]}) close(fd);
        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(cfg.exe.c_str()));
        for (const std::string& a : cfg.args)
            argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        execvp(cfg.exe.c_str(), argv.data());
        _exit(127);  // exec failed
    }
    close(inPipe[0]);
    close(outPipe[1]);

    // feed the formula; a backend that exits early must not kill us
    signal(SIGPIPE, SIG_IGN);
    std::size_t written = 0;
    while (written < input.size()) {
        ssize_t n = write(inPipe[1], input.data() + written,
                          input.size() - written);
        if (n <= 0) break;
        written += static_cast<std::size_t>(n);
    }
    close(inPipe[1]);

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::seconds(timeoutSeconds);
    std::string out;
    bool timedOut = false;
    char buf[4096];
    for (;;) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                        deadline - std::chrono::steady_clock::now())
                        .count();
        if (left <= 0) {
            timedOut = true;
            break;
        }
        struct pollfd pfd{outPipe[0], POLLIN, 0};
        int pr = poll(&pfd, 1, static_cast<int>(left));
        if (pr < 0) break;
        if (pr == 0) {
            timedOut = true;
            break;
        }
        ssize_t n = read(outPipe[0], buf, sizeof buf);
        if (n <= 0) break;  // EOF
        out.append(buf, static_cast<std::size_t>(n));
    }
    close(outPipe[0]);

    int status = 0;
    if (timedOut) {
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        res.outcome = BackendOutcome::TimedOut;
        res.output = out;
        return res;
    }
    waitpid(pid, &status, 0);
    res.output = out;
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && out.empty()) {
        res.outcome = BackendOutcome::SpawnFailed;
        return res;
    }
    try {
        std::regex truthy(cfg.truePattern), falsy(cfg.falsePattern);
        if (std::regex_search(out, truthy))
            res.outcome = BackendOutcome::True;
        else if (std::regex_search(out, falsy))
            res.outcome = BackendOutcome::False;
        else
            res.outcome = BackendOutcome::Unparseable;
    } catch (const std::regex_error&) {
        res.outcome = BackendOutcome::Unparseable;
    }
    return res;
}

}  // namespace fairclear

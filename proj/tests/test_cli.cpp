// Golden output and exit codes of the command-line tool.

#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FOCKLAB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void golden(const std::string& args, const std::string& expected) {
    INFO(args);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == expected + "\n");
}

}  // namespace

TEST_CASE("golden output") {
    golden("act --expr 'alpha(2)' --state '(4,3,3,1,1);-1'", "-|(4,2,2,1,1);-1> + |(4,3,1,1,1);-1> - |(4,3,3);-1>");
    golden("act --expr '[alpha(1), alpha(-1)]' --state '(2,1);1'", "|(2,1);1>");
    golden("act --expr 'Fq(1)' --state '(1);0' --level 2 --ring q", "(q)*|(1,1);0> + |(2);0>");
    golden("mm-act --level 2 --op E1 --state '(2);0'", "(q^-1)*|(1);0>");
    golden("mm-act --level 2 --op F1 --state '(1);0' --json",
           R"([{"state":{"lambda":[1,1],"charge":0},"coeff":{"q^1":"1/1"}},{"state":{"lambda":[2],"charge":0},"coeff":{"q^0":"1/1"}}])");
    golden("chi --partition 2", "1/2*x1^2 + x2");
    golden("schur --partition 2,1 --vars 2", "y1^2*y2 + y1*y2^2");
    golden("bf-check --m 7/2 --state '(1);2'", "from bosons: |(1,1);3>\npsi(7/2):     |(1,1);3>\nagree");
    golden("convert --state '(4,3,3,1,1);-1' --json",
           R"({"state":{"lambda":[4,3,3,1,1],"charge":-1},"maya":{"window_lo":-11,"blacks":[5,1,-1,-7,-9]},"wedge":[5,1,-1,-7,-9,-13,-15,-17]})");
    golden("convert --blacks 5/2,1/2 --window-lo 1/2",
           "state: (1);2\nmaya:  window_lo -1/2, blacks 5/2 1/2 -1/2\nbeads: #.## (black below)\n"
           "wedge: e5/2 ^ e1/2 ^ e-1/2 ^ e-3/2 ^ ...");
    golden("verify --suite heisenberg --max-size 3", "heisenberg: 121 cases, 0 failures");
}

TEST_CASE("exit codes") {
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("act --expr 'psi(4/2)' --state '();0'").code == 2);
    CHECK(run("act --expr 'E(0)' --state '();0'").code == 2);
    CHECK(run("act --expr 'Fq(1)' --state '();0' --level 2").code == 2);
    CHECK(run("act --expr 'K(0)' --state '();0' --level 2 --ring rational").code == 2);
    CHECK(run("act --expr 'K(0)' --state '();0' --level 2 --ring q").code == 0);
    CHECK(run("act --state '();0'").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("schur --partition 2,x").code == 2);
    CHECK(run("convert --maya '{nope'").code == 2);
}

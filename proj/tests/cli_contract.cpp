// Exercises the installed command-line surface end to end: exact stdout
// bytes and exit codes for every documented behavior. Takes the binary path
// as its only argument.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    std::perror("popen");
    std::exit(2);
  }
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string escaped(const std::string& text) {
  std::string out;
  for (const char c : text) {
    if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

void expect(const std::string& args, int code, const std::string& out) {
  const RunResult r = run_cli(args);
  if (r.code == code && r.out == out) {
    std::cout << "ok: " << args << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL: " << args << "\n  expected exit " << code
              << " with stdout \"" << escaped(out) << "\"\n  got exit "
              << r.code << " with stdout \"" << escaped(r.out) << "\"\n";
  }
}

void expect_exit(const std::string& args, int code) {
  const RunResult r = run_cli(args);
  if (r.code == code) {
    std::cout << "ok: " << args << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL: " << args << "\n  expected exit " << code
              << ", got exit " << r.code << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_contract <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  // validate
  expect("validate path --t 3 'FUFUFUDDD'", 0, "valid\n");
  expect("validate path --t 3 'UFD'", 1, "BadFlatUpAlternation\n");
  expect("validate path 'FUUDD'", 1, "WrongStepCounts\n");
  expect("validate path ''", 0, "valid\n");
  expect("validate path 'FXD'", 1, "invalid character 'X' at index 1\n");
  expect("validate path --t 4 'FFUDFFUD'", 0, "valid\n");
  expect("validate walk 'YXZ'", 1, "outside-omega at move 1\n");
  expect("validate walk 'XWZ'", 1, "invalid character 'W' at index 1\n");
  expect("validate walk 'XYZ'", 0, "valid\n");
  expect("validate walk 'XYZX'", 1, "wrong-endpoint\n");
  expect("validate tree '(...)'", 0, "valid\n");
  expect("validate tree '(..)'", 1, "child count mismatch at index 3\n");
  expect("validate tree --t 4 '(....)'", 0, "valid\n");
  expect("validate bogus 'FUD'", 2, "");
  expect("validate path", 2, "");

  // convert
  expect("convert --from path --to tree 'FUDFUDFUD'", 0, "(((...)..)..)\n");
  expect("convert --from tree --to path '(..(..(...)))'", 0, "FUFUFUDDD\n");
  expect("convert --from walk --to tree 'XYZ'", 0, "(...)\n");
  expect("convert --from path --to walk 'FUD'", 0, "XYZ\n");
  expect("convert --from walk --to path 'XYXYZZ'", 0, "FUFUDD\n");
  expect("convert --from tree --to walk '(.(...).)'", 0, "XYXZYZ\n");
  expect("convert --from path --to tree 'UFD'", 1, "");
  expect("convert --from walk --to path 'YXZ'", 1, "");
  expect("convert --from path --to path 'FUD'", 2, "");
  expect("convert --from path --to tree --t 4 'FFUD'", 2, "");

  // enumerate
  expect("enumerate path --n 1 --t 3", 0, "FUD\n");
  expect("enumerate path --n 2 --t 3", 0, "FUDFUD\nFUFDUD\nFUFUDD\n");
  expect("enumerate path --n 3 --t 3 --count-only", 0, "12\n");
  expect("enumerate tree --n 2 --t 3", 0, "((...)..)\n(.(...).)\n(..(...))\n");
  expect("enumerate tree --n 1 --t 5 --count-only", 0, "1\n");
  expect("enumerate path --n 0 --t 3", 0, "\n");   // the empty path
  expect("enumerate tree --n 0 --t 3", 0, ".\n");  // the empty tree
  expect("enumerate path --n 9 --t 3", 2, "");
  expect("enumerate walk --n 1", 2, "");

  // count
  expect("count --n 3 --t 3", 0, "12\n");
  expect("count --n 0 --t 5", 0, "1\n");
  expect("count --n 4 --t 3 --brute", 0, "55\n");
  expect("count --n 10 --t 2 --brute", 0, "16796\n");
  expect("count --n 30 --t 3", 0, "11034966795189838872624\n");
  expect("count --n 9 --t 3 --brute", 2, "");

  // render
  expect("render path 'FUD'", 0, " /\\\n_\n");
  expect("render path ''", 0, "");
  expect("render path 'FUFUFUDDD'", 0, "     /\\\n   /_  \\\n /_     \\\n_\n");
  expect("render tree '(.(...).)'", 0, "*\n  M: *\n");
  expect("render tree '((...)..)'", 0, "*\n  L: *\n");
  expect("render tree --t 4 '(.(....)..)'", 0, "*\n  C1: *\n");
  expect("render tree '.'", 0, "");
  expect("render path 'DU'", 1, "");
  expect("render path 'FU'", 1, "");

  // check
  expect("check --max-n 2 --t 2,3",
         0,
         "counts t=2 n<=2: pass\n"
         "counts t=3 n<=2: pass\n"
         "roundtrips t=3 n<=2: pass\n"
         "bijectivity t=3 n<=2: pass\n"
         "walk-counts n<=2: pass\n"
         "walk-words n<=2: pass\n");
  expect("check --max-n 4 --t 2,3,4",
         0,
         "counts t=2 n<=4: pass\n"
         "counts t=3 n<=4: pass\n"
         "counts t=4 n<=4: pass\n"
         "roundtrips t=3 n<=4: pass\n"
         "bijectivity t=3 n<=4: pass\n"
         "walk-counts n<=4: pass\n"
         "walk-words n<=4: pass\n");
  expect("check --max-n 3 --t 3",
         0,
         "counts t=3 n<=3: pass\n"
         "roundtrips t=3 n<=3: pass\n"
         "bijectivity t=3 n<=3: pass\n"
         "walk-counts n<=3: pass\n"
         "walk-words n<=3: pass\n");
  expect("check --max-n 3 --t 4", 0, "counts t=4 n<=3: pass\n");
  expect("check --max-n 0 --t 3",
         0,
         "counts t=3 n<=0: pass\n"
         "roundtrips t=3 n<=0: pass\n"
         "bijectivity t=3 n<=0: pass\n"
         "walk-counts n<=0: pass\n"
         "walk-words n<=0: pass\n");
  expect("check --max-n 9 --t 3", 2, "");

  // batch mode: one output line per input line, exit 1 when any line fails
  {
    const std::string file = "cli_contract_batch.txt";
    std::ofstream out(file);
    out << "FUFUFUDDD\nUFD\nFUDFUD\n";
    out.close();
    expect("validate path --file " + file, 1,
           "valid\nBadFlatUpAlternation\nvalid\n");
    expect("convert --from path --to tree --file " + file, 1,
           "(..(..(...)))\nerror: BadFlatUpAlternation\n((...)..)\n");
    std::remove(file.c_str());
  }
  {
    const std::string file = "cli_contract_batch_ok.txt";
    std::ofstream out(file);
    out << "FUD\nFUFUDD\n";
    out.close();
    expect("validate path --file " + file, 0, "valid\nvalid\n");
    expect("convert --from path --to walk --file " + file, 0,
           "XYZ\nXYXYZZ\n");
    std::remove(file.c_str());
  }
  expect("validate path --file does_not_exist.txt", 2, "");

  // determinism: identical invocation, identical bytes
  {
    const RunResult first = run_cli("enumerate path --n 4 --t 3");
    const RunResult second = run_cli("enumerate path --n 4 --t 3");
    if (first.out == second.out && first.code == 0 && second.code == 0) {
      std::cout << "ok: enumerate output is reproducible\n";
    } else {
      ++g_failures;
      std::cout << "FAIL: enumerate output differs between runs\n";
    }
  }

  expect_exit("--help", 0);
  expect_exit("", 2);

  if (g_failures == 0) {
    std::cout << "cli contract: all cases passed\n";
    return 0;
  }
  std::cout << "cli contract: " << g_failures << " case(s) FAILED\n";
  return 1;
}

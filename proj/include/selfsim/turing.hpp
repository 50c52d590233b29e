#pragma once
// Deterministic one-way-tape Turing machines: JSON (de)serialization,
// validation, windowed simulation, and the shipped sample machines.
//
// Tape cells are numbered from 1; the head starts at cell 1 in the start
// state. A left move at cell 1 means the machine falls off and halts. The
// windowed simulator watches cells 1..width and treats the head leaving to
// the right as "survives forever" (nothing it does outside the window is
// visible). The step count reported is the number of completed steps that
// neither fall off nor enter a halting state.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace selfsim {

struct TuringMachine {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::string blank;
  std::string start;
  std::set<std::string> halt;
  // (state, read) -> (state, write, move)
  std::map<std::pair<std::string, std::string>, std::tuple<std::string, std::string, char>> delta;

  void validate() const {
    std::set<std::string> st(states.begin(), states.end());
    std::set<std::string> al(alphabet.begin(), alphabet.end());
    if (st.size() != states.size()) throw std::runtime_error("turing machine: duplicate state");
    if (al.size() != alphabet.size()) throw std::runtime_error("turing machine: duplicate symbol");
    if (!al.count(blank)) throw std::runtime_error("turing machine: blank symbol not in alphabet");
    if (!st.count(start)) throw std::runtime_error("turing machine: start state unknown");
    for (const auto& h : halt)
      if (!st.count(h)) throw std::runtime_error("turing machine: halting state unknown");
    for (const auto& [key, val] : delta) {
      if (!st.count(key.first) || !al.count(key.second))
        throw std::runtime_error("turing machine: transition from unknown state/symbol");
      if (halt.count(key.first))
        throw std::runtime_error("turing machine: transition from halting state " + key.first);
      if (!st.count(std::get<0>(val)) || !al.count(std::get<1>(val)))
        throw std::runtime_error("turing machine: transition to unknown state/symbol");
      if (std::get<2>(val) != 'L' && std::get<2>(val) != 'R')
        throw std::runtime_error("turing machine: move must be L or R");
    }
    for (const auto& q : states) {
      if (halt.count(q)) continue;
      for (const auto& a : alphabet)
        if (!delta.count({q, a}))
          throw std::runtime_error("turing machine: missing transition for (" + q + ", " + a + ")");
    }
  }
};

inline nlohmann::ordered_json tm_to_json(const TuringMachine& m) {
  nlohmann::ordered_json out;
  out["states"] = m.states;
  out["alphabet"] = m.alphabet;
  out["blank"] = m.blank;
  out["start"] = m.start;
  out["halt"] = std::vector<std::string>(m.halt.begin(), m.halt.end());
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, val] : m.delta)
    rows.push_back({key.first, key.second, std::get<0>(val), std::get<1>(val),
                    std::string(1, std::get<2>(val))});
  out["delta"] = std::move(rows);
  return out;
}

inline TuringMachine tm_from_json(const nlohmann::ordered_json& j) {
  TuringMachine m;
  m.states = j.at("states").get<std::vector<std::string>>();
  m.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  m.blank = j.at("blank").get<std::string>();
  m.start = j.at("start").get<std::string>();
  for (const auto& h : j.at("halt")) m.halt.insert(h.get<std::string>());
  for (const auto& row : j.at("delta")) {
    if (!row.is_array() || row.size() != 5)
      throw std::runtime_error("turing machine: delta rows are [state,read,state,write,move]");
    std::string move = row.at(4).get<std::string>();
    if (move.size() != 1) throw std::runtime_error("turing machine: move must be L or R");
    auto key = std::make_pair(row.at(0).get<std::string>(), row.at(1).get<std::string>());
    if (m.delta.count(key))
      throw std::runtime_error("turing machine: nondeterministic transition for (" + key.first +
                               ", " + key.second + ")");
    m.delta[key] = {row.at(2).get<std::string>(), row.at(3).get<std::string>(), move[0]};
  }
  m.validate();
  return m;
}

// One configuration: window tape contents, head cell (1-based; 0 once the
// head has left the window to the right), current state.
struct TmConfig {
  std::vector<std::string> tape;
  int head = 1;
  std::string state;
};

struct TmRun {
  // configs[k] is the configuration after k completed steps; configs[0] is
  // the initial one. The run stops early when a step would fall off, enter a
  // halting state in-window, or exceed max_steps.
  std::vector<TmConfig> configs;
  bool exited_right = false;   // head left the window; survives forever
  bool halted = false;         // fell off the left end or entered a halting state
  long long survived_steps = 0;
};

// Runs the machine on `input` written on cells 1..n of a `width`-cell window
// (blank beyond the input). Steps whose head lands outside the window stop
// the visible run with exited_right set.
inline TmRun simulate(const TuringMachine& m, const std::vector<std::string>& input, int width,
                      long long max_steps) {
  if (width < static_cast<int>(input.size()))
    throw std::runtime_error("simulate: window narrower than the input");
  TmRun run;
  TmConfig c;
  c.tape.assign(static_cast<size_t>(width), m.blank);
  for (size_t i = 0; i < input.size(); ++i) c.tape[i] = input[i];
  c.head = 1;
  c.state = m.start;
  run.configs.push_back(c);
  if (m.halt.count(c.state)) {
    run.halted = true;
    return run;
  }
  if (width < 1) {
    run.exited_right = true;
    return run;
  }
  for (long long step = 1; step <= max_steps; ++step) {
    const std::string read = c.tape[static_cast<size_t>(c.head - 1)];
    const auto& [q2, write, move] = m.delta.at({c.state, read});
    if (move == 'L' && c.head == 1) {
      run.halted = true;  // falls off; this step does not survive
      return run;
    }
    c.tape[static_cast<size_t>(c.head - 1)] = write;
    c.head += move == 'R' ? 1 : -1;
    c.state = q2;
    if (c.head > width) {
      run.exited_right = true;  // survives forever as far as the window knows
      return run;
    }
    if (m.halt.count(q2)) {
      run.halted = true;  // entering a halting state does not survive
      return run;
    }
    run.configs.push_back(c);
    run.survived_steps = step;
  }
  return run;
}

// ----- sample machines --------------------------------------------------------

// Moves right forever, leaving the tape unchanged. Parameterized by alphabet
// so it can run over omega tape symbols.
inline TuringMachine never_halt_tm(const std::vector<std::string>& alphabet,
                                   const std::string& blank) {
  TuringMachine m;
  m.states = {"q0"};
  m.alphabet = alphabet;
  m.blank = blank;
  m.start = "q0";
  for (const auto& a : alphabet) m.delta[{"q0", a}] = {"q0", a, 'R'};
  m.validate();
  return m;
}

// Halts at step 1 on every input (moves left off the tape edge).
inline TuringMachine halt_at_step_one_tm() {
  TuringMachine m;
  m.states = {"q0", "qh"};
  m.alphabet = {"0", "1", "_"};
  m.blank = "_";
  m.start = "q0";
  m.halt = {"qh"};
  for (const std::string a : {"0", "1", "_"}) m.delta[{"q0", a}] = {"qh", a, 'L'};
  m.validate();
  return m;
}

// Binary odometer over a least-significant-bit-first tape. The first cell is
// marked on the first pass (0s/1s variants) so the returning head can find
// the tape start without falling off; it then bounces forever, incrementing
// the number once per bounce. Never halts, never moves left from cell 1.
inline TuringMachine adding_machine_tm() {
  TuringMachine m;
  m.states = {"init", "carry", "ret"};
  m.alphabet = {"0", "1", "0s", "1s", "_"};
  m.blank = "_";
  m.start = "init";
  m.delta[{"init", "0"}] = {"ret", "0s", 'R'};
  m.delta[{"init", "1"}] = {"ret", "1s", 'R'};
  m.delta[{"init", "_"}] = {"ret", "0s", 'R'};
  m.delta[{"init", "0s"}] = {"ret", "0s", 'R'};  // fires only on pre-marked input
  m.delta[{"init", "1s"}] = {"ret", "1s", 'R'};  // fires only on pre-marked input
  m.delta[{"carry", "0"}] = {"ret", "1", 'L'};
  m.delta[{"carry", "1"}] = {"carry", "0", 'R'};
  m.delta[{"carry", "_"}] = {"ret", "1", 'L'};
  m.delta[{"carry", "0s"}] = {"ret", "0s", 'R'};  // fires only on pre-marked input
  m.delta[{"carry", "1s"}] = {"ret", "1s", 'R'};  // fires only on pre-marked input
  m.delta[{"ret", "0"}] = {"ret", "0", 'L'};
  m.delta[{"ret", "1"}] = {"ret", "1", 'L'};
  m.delta[{"ret", "_"}] = {"ret", "_", 'L'};      // blank frontier of a short number
  m.delta[{"ret", "0s"}] = {"ret", "1s", 'R'};    // increment completes at the marked cell
  m.delta[{"ret", "1s"}] = {"carry", "0s", 'R'};  // carry onward
  m.validate();
  return m;
}

// Scans right over bits; on the first blank, halts if it saw an even number
// of ones, otherwise walks right forever.
inline TuringMachine parity_checker_tm() {
  TuringMachine m;
  m.states = {"even", "odd", "qh"};
  m.alphabet = {"0", "1", "_"};
  m.blank = "_";
  m.start = "even";
  m.halt = {"qh"};
  m.delta[{"even", "0"}] = {"even", "0", 'R'};
  m.delta[{"even", "1"}] = {"odd", "1", 'R'};
  m.delta[{"even", "_"}] = {"qh", "_", 'R'};
  m.delta[{"odd", "0"}] = {"odd", "0", 'R'};
  m.delta[{"odd", "1"}] = {"even", "1", 'R'};
  m.delta[{"odd", "_"}] = {"odd", "_", 'R'};
  m.validate();
  return m;
}

inline TuringMachine sample_tm_by_name(const std::string& name) {
  if (name == "never-halt") return never_halt_tm({"0", "1", "_"}, "_");
  if (name == "halt-1") return halt_at_step_one_tm();
  if (name == "adder") return adding_machine_tm();
  if (name == "parity") return parity_checker_tm();
  throw std::runtime_error("unknown sample machine '" + name +
                           "' (expected never-halt|halt-1|adder|parity)");
}

}  // namespace selfsim

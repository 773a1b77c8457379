// Acceptance suite: one line per criterion, nonzero exit when any fails.
//
//   transgp_acceptance [--work DIR] [--only 1,5,7]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "transgp/analysis/patterns.hpp"
#include "transgp/analysis/similarity.hpp"
#include "transgp/analysis/wilcoxon.hpp"
#include "transgp/cli/commands.hpp"
#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/expr/prefix_stack.hpp"
#include "transgp/guided/guided_mutation.hpp"
#include "transgp/neural/model_io.hpp"
#include "transgp/sim/audit.hpp"
#include "transgp/sim/simulator.hpp"

namespace fs = std::filesystem;
using namespace transgp;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

TransformerConfig small_model() {
  TransformerConfig m;
  m.d = 64;
  m.heads = 4;
  m.layers = 2;
  m.ff = 256;
  return m;
}

// Tree valid, within depth 8, and its prefix form parses back to itself.
bool well_formed(const ExprTree& t) {
  if (t.depth() > kDefaultMaxDepth) return false;
  try {
    return from_prefix_tokens(to_prefix_tokens(t)) == t;
  } catch (const Error&) {
    return false;
  }
}

// Scenario 2 at desk scale: a GP harvest, two models trained on it, then GP,
// TransGP, the handcrafted grid and PureTrans on shared test seeds. Each
// stage runs once, on first use.
class DeskPipeline {
 public:
  explicit DeskPipeline(fs::path root) : root_(std::move(root)) {
    base_.scenario = 2;
    base_.tasks = stock_scenario(2);
    base_.seed = 7;
    base_.evo.pop_size = 99;
    base_.evo.generations = 15;
    base_.pure_trans_samples = 30;
    base_.out = root_ / "e2e";
  }

  const ExperimentConfig& base() const { return base_; }

  const CollectOutput& corpus() {
    if (!corpus_) {
      ExperimentConfig h = base_;
      h.seed = 1000;
      h.runs = 3;
      h.out = root_ / "harvest";
      const EvolveOutput harvest = cmd_evolve(h);
      corpus_ = cmd_collect({harvest.method_dir}, 20, 10, root_ / "data");
    }
    return *corpus_;
  }

  const RuleModels& models() {
    if (!models_) {
      const CollectOutput& c = corpus();
      RuleModels m;
      for (RuleKind kind : {RuleKind::kSequencing, RuleKind::kRouting}) {
        TrainConfig tc = base_.train;
        tc.seed = derive_seed(base_.seed, seed_stream::kTraining, static_cast<std::uint64_t>(kind));
        const fs::path file = kind == RuleKind::kSequencing ? c.sequencing_file : c.routing_file;
        const TrainOutput out = cmd_train(file, kind, base_.model, tc, root_ / "models");
        (kind == RuleKind::kSequencing ? m.sequencing : m.routing) = out.result.params;
      }
      models_ = std::move(m);
    }
    return *models_;
  }

  ExperimentConfig with_models() {
    models();
    ExperimentConfig cfg = base_;
    cfg.sequencing_model = root_ / "models" / "sequencing.tgpm";
    cfg.routing_model = root_ / "models" / "routing.tgpm";
    return cfg;
  }

  const EvolveOutput& gp() {
    if (!gp_) {
      ExperimentConfig cfg = base_;
      cfg.runs = 5;
      gp_ = cmd_evolve(cfg);
    }
    return *gp_;
  }

  const EvolveOutput& trans() {
    if (!trans_) {
      ExperimentConfig cfg = with_models();
      cfg.method = Method::kTransGP;
      cfg.runs = 5;
      trans_ = cmd_evolve(cfg);
    }
    return *trans_;
  }

  const std::vector<BaselineRow>& baseline() {
    if (!baseline_) baseline_ = cmd_baseline(base_);
    return *baseline_;
  }

  const std::vector<PureTransRow>& pure() {
    if (!pure_) pure_ = cmd_pure_trans(with_models());
    return *pure_;
  }

 private:
  fs::path root_;
  ExperimentConfig base_;
  std::optional<CollectOutput> corpus_;
  std::optional<RuleModels> models_;
  std::optional<EvolveOutput> gp_, trans_;
  std::optional<std::vector<BaselineRow>> baseline_;
  std::optional<std::vector<PureTransRow>> pure_;
};

// 1. Codec round trips; corrupted sequences are rejected or round-trip-stable.
Verdict codec_soundness() {
  Rng rng(101);
  int round_trips = 0, rejected = 0, stable = 0, bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const ExprTree t = random_tree(0, kDefaultMaxDepth,
                                   rng.bernoulli(0.5) ? InitMethod::kGrow : InitMethod::kFull, rng);
    round_trips += from_prefix_tokens(to_prefix_tokens(t)) == t;
  }
  for (int i = 0; i < 10000; ++i) {
    TokenSequence s = to_prefix_tokens(random_tree(0, 5, InitMethod::kGrow, rng));
    const std::size_t pos = 1 + rng.index(s.size() - 2);
    const Token other = token_from_id(static_cast<int>(rng.index(kVocabSize)));
    switch (rng.index(3)) {
      case 0: s[pos] = other; break;
      case 1: s.insert(s.begin() + static_cast<long>(pos), other); break;
      default: s.erase(s.begin() + static_cast<long>(pos)); break;
    }
    try {
      const ExprTree t = from_prefix_tokens(s);
      if (to_prefix_tokens(t) == s) {
        ++stable;
      } else {
        ++bad;
      }
    } catch (const MalformedSequence&) {
      ++rejected;
    }
  }
  return {round_trips == 10000 && bad == 0,
          std::to_string(round_trips) + "/10000 round trips; corrupted: " + std::to_string(rejected) +
              " rejected, " + std::to_string(stable) + " stable, " + std::to_string(bad) + " unsound"};
}

// 2. Every regenerated suffix from a random model is a valid depth-8 tree.
Verdict masked_generation() {
  Rng rng(202);
  const auto model = TransformerParams<float>::random(small_model(), 0.02, rng);
  const std::vector<TaskSpec> tasks = stock_scenario(2);
  GuidedConfig cfg;
  int valid = 0;
  long overflows = 0;
  for (int i = 0; i < 10000; ++i) {
    const ExprTree parent = random_tree(0, kDefaultMaxDepth,
                                        rng.bernoulli(0.5) ? InitMethod::kGrow : InitMethod::kFull, rng);
    const std::size_t k = rng.index(parent.size());
    const auto task = task_embedding(tasks[rng.index(tasks.size())]);
    try {
      const ExprTree child = regenerate_suffix(model, parent, k, task, cfg, rng);
      const auto pn = parent.nodes();
      const auto cn = child.nodes();
      valid += well_formed(child) && std::equal(pn.begin(), pn.begin() + static_cast<long>(k), cn.begin());
    } catch (const RegenerationOverflow&) {
      ++overflows;
    }
  }
  return {valid == 10000, std::to_string(valid) + "/10000 valid, " + std::to_string(overflows) + " overflows"};
}

// 3. Analytic gradients against central differences, tiny double model.
Verdict gradient_check_criterion() {
  TransformerConfig c;
  c.d = 16;
  c.heads = 2;
  c.layers = 2;
  c.ff = 64;
  c.max_len = 24;
  c.dropout = 0.0;
  Rng rng(303);
  const auto params = TransformerParams<double>::random(c, 0.3, rng);
  std::vector<TokenSequence> seqs;
  while (seqs.size() < 4) {
    TokenSequence s = to_prefix_tokens(random_tree(0, 4, InitMethod::kGrow, rng));
    if (s.size() <= 24) seqs.push_back(std::move(s));
  }
  const auto ta = task_embedding(TaskSpec::parse("Fmean-0.85-8"));
  const auto tb = task_embedding(TaskSpec::parse("Tmean-0.95-10"));
  const std::vector<SequenceInput> batch = {{seqs[0], ta}, {seqs[1], tb}, {seqs[2], ta}, {seqs[3], tb}};
  const GradientCheckResult res = gradient_check(params, batch);
  std::size_t worst = 0;
  for (std::size_t g = 1; g < res.errors.size(); ++g) {
    if (res.errors[g] > res.errors[worst]) worst = g;
  }
  return {res.max_error < 1e-3 && res.groups.size() == params.tensor_names().size(),
          "max relative error " + sci(res.max_error) + " over " + std::to_string(res.groups.size()) +
              " groups (worst " + res.groups[worst] + ")"};
}

// 4. Untrained loss near ln 18, then training on 500 collected records.
Verdict loss_sanity(DeskPipeline& desk) {
  EliteDataset ds = desk.corpus().deduped.of_kind(RuleKind::kRouting);
  if (ds.records.size() > 500) ds.records.resize(500);
  TrainConfig tc;
  tc.epochs = 50;
  tc.seed = 404;
  const TransformerConfig stock;
  const TrainResult r = train(ds, stock, tc);
  double worst_rise = 0.0;
  for (std::size_t e = 1; e < r.epoch_losses.size(); ++e) {
    worst_rise = std::max(worst_rise, r.epoch_losses[e] - r.epoch_losses[e - 1]);
  }
  const double final_loss = r.epoch_losses.back();
  const bool init_ok = std::abs(r.initial_loss - std::log(18.0)) <= 0.1;
  return {ds.records.size() == 500 && init_ok && final_loss <= 0.5 * r.initial_loss && worst_rise <= 0.2,
          std::to_string(ds.records.size()) + " records; initial " + fmt(r.initial_loss) + " (ln 18 = " +
              fmt(std::log(18.0)) + "), final " + fmt(final_loss) + ", largest rise " + fmt(worst_rise)};
}

// 5. Hand-computed instance, then the auditor over random instances.
Verdict simulator_oracle() {
  Instance inst;
  inst.machines = {Machine{10.0}};
  inst.transport = zero_transport(1);
  inst.jobs = {Job{0.0, 0.0, 1.0, {Operation{100.0, {0}}}}, Job{5.0, 0.0, 1.0, {Operation{200.0, {0}}}}};
  assign_due_dates(inst, 1.5);
  const HandcraftedPolicy spt(SequencingRule::kSPT, RoutingRule::kNIQ);
  const SimResult res = run_simulation(inst, spt, Objective::kFmean);
  const double fmax = objective(res, Objective::kFmax);
  const double fmean = objective(res, Objective::kFmean);
  const double tmean = objective(res, Objective::kTmean);
  const bool oracle = fmax == 25.0 && fmean == 17.5 && tmean == 0.0;

  Rng rng(505);
  const std::vector<TaskSpec> tasks = stock_scenario(2);
  long violations = 0;
  int audited = 0;
  for (int i = 0; i < 100; ++i) {
    ScenarioConfig sc;
    sc.task = tasks[static_cast<std::size_t>(i) % tasks.size()];
    const Instance random_inst = generate_instance(sc, derive_seed(505, seed_stream::kInstance, i));
    const Heuristic evolved_like{random_tree(1, 5, InitMethod::kGrow, rng),
                                 random_tree(1, 5, InitMethod::kGrow, rng)};
    const HandcraftedPolicy edd(SequencingRule::kEDD, RoutingRule::kWIQ);
    const HeuristicPolicy tree_policy(evolved_like);
    for (const Policy* p : std::vector<const Policy*>{&spt, &edd, &tree_policy}) {
      violations += static_cast<long>(audit_schedule(random_inst, run_simulation(random_inst, *p, sc.task.objective)).size());
      ++audited;
    }
  }
  return {oracle && violations == 0,
          "Fmax " + fmt(fmax, 2) + ", Fmean " + fmt(fmean, 2) + ", Tmean " + fmt(tmean, 2) + "; " +
              std::to_string(violations) + " violations over " + std::to_string(audited) + " schedules"};
}

// 6. SPT pairings beat every LPT and FIFO pairing on each scenario-2 task.
Verdict handcrafted_ordering(DeskPipeline& desk) {
  std::map<std::string, std::map<std::string, double>> by_task;
  for (const BaselineRow& r : desk.baseline()) by_task[r.task_id][r.rule] = r.test_mean;
  bool ok = by_task.size() == 3;
  std::string detail;
  for (const auto& [task, rules] : by_task) {
    const double spt = std::max(rules.at("SPT+NIQ"), rules.at("SPT+WIQ"));
    double other = INFINITY;
    for (const char* r : {"LPT+NIQ", "LPT+WIQ", "FIFO+NIQ", "FIFO+WIQ"}) other = std::min(other, rules.at(r));
    ok = ok && spt < other;
    detail += task + ": SPT worst " + fmt(spt, 2) + " vs LPT/FIFO best " + fmt(other, 2) + "; ";
  }
  return {ok, detail};
}

// 7. TransGP against GP and against the best handcrafted pair per task.
Verdict desk_improvement(DeskPipeline& desk) {
  const EvolveOutput& gp = desk.gp();
  const EvolveOutput& tr = desk.trans();
  std::map<std::string, double> best_hand;
  for (const BaselineRow& r : desk.baseline()) {
    auto [it, fresh] = best_hand.emplace(r.task_id, r.test_mean);
    if (!fresh) it->second = std::min(it->second, r.test_mean);
  }
  int beats_gp = 0, beats_hand = 0;
  std::string detail;
  const auto& tasks = desk.base().tasks;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const double g = summarize(gp.test[t]).mean;
    const double m = summarize(tr.test[t]).mean;
    const double h = best_hand.at(tasks[t].id());
    beats_gp += m <= g;
    beats_hand += m < h;
    detail += tasks[t].id() + ": TransGP " + fmt(m, 2) + " GP " + fmt(g, 2) + " hand " + fmt(h, 2) + "; ";
  }
  detail += "fallbacks " + std::to_string(tr.guided_fallbacks);
  return {beats_gp >= 2 && beats_hand >= 2, detail};
}

// 8. PureTrans spread against TransGP's across-run spread.
Verdict pure_trans_variance(DeskPipeline& desk) {
  const EvolveOutput& tr = desk.trans();
  const auto& pure = desk.pure();
  bool ok = pure.size() == tr.test.size();
  std::string detail;
  for (std::size_t t = 0; t < pure.size() && t < tr.test.size(); ++t) {
    const double spread = summarize(tr.test[t]).std;
    ok = ok && pure[t].samples.size() == 30 && pure[t].stats.std >= 2.0 * spread;
    detail += pure[t].task_id + ": PureTrans std " + fmt(pure[t].stats.std, 2) + " vs TransGP std " +
              fmt(spread, 2) + "; ";
  }
  return {ok, detail};
}

// 9. Mean final heuristic size, TransGP against GP.
Verdict size_direction(DeskPipeline& desk) {
  auto mean_size = [](const EvolveOutput& o) {
    double sum = 0;
    int n = 0;
    for (const auto& run : o.best) {
      for (const Heuristic& h : run) {
        sum += static_cast<double>(h.size());
        ++n;
      }
    }
    return sum / n;
  };
  const double g = mean_size(desk.gp());
  const double m = mean_size(desk.trans());
  return {m <= g, "TransGP " + fmt(m, 2) + " vs GP " + fmt(g, 2)};
}

// Two-sided exact p by listing all rank assignments; untied data only.
double enumerated_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  double w = 0;
  for (double v : a) w += static_cast<double>(std::find(pooled.begin(), pooled.end(), v) - pooled.begin() + 1);
  const int n = static_cast<int>(a.size());
  const int total = static_cast<int>(pooled.size());
  const double centre = n * (total + 1) / 2.0;
  long hit = 0, all = 0;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (std::popcount(mask) != n) continue;
    double s = 0;
    for (int i = 0; i < total; ++i) s += (mask >> i & 1u) ? i + 1 : 0;
    ++all;
    hit += std::abs(s - centre) >= std::abs(w - centre) - 1e-9;
  }
  return static_cast<double>(hit) / static_cast<double>(all);
}

// 10. Exact rank-sum path against enumeration.
Verdict statistics_oracle() {
  int cases = 0, mismatches = 0;
  double worst = 0;
  for (int total = 2; total <= 8; ++total) {
    for (int n = 1; n < total; ++n) {
      for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (std::popcount(mask) != n) continue;
        std::vector<double> a, b;
        for (int i = 0; i < total; ++i) ((mask >> i & 1u) ? a : b).push_back(i + 1);
        const double got = wilcoxon_rank_sum(a, b).p_value;
        const double want = enumerated_p(a, b);
        worst = std::max(worst, std::abs(got - want));
        mismatches += std::abs(got - want) > 1e-12;
        ++cases;
      }
    }
  }
  const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
  const double p = wilcoxon_rank_sum(a, b).p_value;
  return {mismatches == 0 && p == 0.1,
          std::to_string(cases) + " splits, " + std::to_string(mismatches) + " mismatches (max diff " +
              sci(worst) + "); [1,2,3] vs [4,5,6] p = " + fmt(p, 15)};
}

double entropy(const std::vector<double>& p) {
  double h = 0;
  for (double x : p) {
    if (x > 0) h -= x * std::log(x);
  }
  return h;
}

// 11. Temperature: cold sampling is argmax, entropy grows with gamma, and
// evolution runs at every setting.
Verdict temperature_properties(DeskPipeline& desk) {
  Rng rng(1101);
  int agree = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    std::vector<double> logits(kVocabSize);
    for (double& l : logits) l = 3.0 * rng.normal();
    PrefixStack stack;
    const int prefix = static_cast<int>(rng.index(6));
    for (int j = 0; j < prefix && !stack.complete(); ++j) {
      stack.push(token_from_id(2 + static_cast<int>(rng.index(16))));
    }
    const TokenSet valid = valid_next_tokens(stack);
    Token best = Token::kEnd;
    double top = -INFINITY;
    for (Token t : valid.to_vector()) {
      if (logits[static_cast<std::size_t>(token_id(t))] > top) {
        top = logits[static_cast<std::size_t>(token_id(t))];
        best = t;
      }
    }
    agree += masked_sample(logits, valid, 1e-6, rng) == best;
  }
  const double freq = static_cast<double>(agree) / draws;

  const RuleModels& models = desk.models();
  const std::vector<double> gammas = {0.5, 1.0, 1.5};
  std::vector<double> mean_h(gammas.size(), 0.0);
  const auto& records = desk.corpus().deduped.records;
  int contexts = 0;
  for (std::size_t i = 0; i < records.size() && contexts < 300; i += 3, ++contexts) {
    const EliteRecord& r = records[i];
    const std::size_t cut = 1 + rng.index(r.tokens.size() - 2);
    const std::span<const Token> prefix(r.tokens.data(), cut);
    const auto logits = next_token_logits(models.of(r.kind), prefix, r.embedding);
    const TokenSet valid = valid_next_tokens(PrefixStack::from_prefix(prefix.subspan(1)));
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      mean_h[g] += entropy(masked_probabilities(logits, valid, gammas[g])) / 300.0;
    }
  }
  const bool monotone = mean_h[0] <= mean_h[1] && mean_h[1] <= mean_h[2];

  bool evolved = true;
  std::string runs;
  for (double g : gammas) {
    ExperimentConfig cfg = desk.with_models();
    cfg.method = Method::kTransGP;
    cfg.guided.temperature = g;
    cfg.evo.generations = 5;
    cfg.out = cfg.out / ("temperature_" + fmt(g, 1));
    const EvolveOutput out = cmd_evolve(cfg);
    for (const auto& row : out.test) {
      for (double v : row) evolved = evolved && std::isfinite(v) && v > 0;
    }
    for (const Heuristic& h : out.best.at(0)) {
      evolved = evolved && well_formed(h.sequencing) && well_formed(h.routing);
    }
    runs += " " + fmt(g, 1) + ":" + fmt(summarize(out.test[0]).mean, 1);
  }
  return {freq > 0.999 && monotone && evolved,
          "argmax agreement " + fmt(freq, 5) + "; mean entropy " + fmt(mean_h[0]) + " <= " + fmt(mean_h[1]) +
              " <= " + fmt(mean_h[2]) + "; evolution test Fmean" + runs};
}

// 12. Similarity, coverage and pattern-similarity formulas.
Verdict analysis_formulas() {
  TokenSet a, b;
  for (Token t : {Token::kPT, Token::kWKR, Token::kNIQ}) a.insert(t);
  for (Token t : {Token::kPT, Token::kWKR, Token::kMWT}) b.insert(t);
  const double j = jaccard(a, b);
  const double s = size_similarity(19, 17);

  Rng rng(1201);
  std::vector<ExprTree> corpus;
  for (int i = 0; i < 300; ++i) corpus.push_back(random_tree(0, 6, InitMethod::kGrow, rng));
  const double coverage = mine_patterns(corpus).coverage_sum();

  // Offspring assembled from corpus subtrees under a corpus root.
  const std::set<std::string> patterns = corpus_patterns(corpus);
  const ExprTree& host = *std::find_if(corpus.begin(), corpus.end(), [](const ExprTree& t) { return t.size() >= 3; });
  const ExprTree offspring = parse_infix(infix_string(host));
  const double ps = pattern_similarity(offspring, patterns);
  const double built = pattern_similarity(parse_infix("+(*(PT, WKR), -(NIQ, TIS))"),
                                          corpus_patterns({parse_infix("+(*(PT, WKR), -(NIQ, TIS))"),
                                                           parse_infix("max(PT, NIQ)")}));
  const bool ok = j == 0.5 && std::abs(s - 0.8947) < 5e-5 && std::abs(coverage - 100.0) < 1e-9 &&
                  std::abs(ps - 100.0) < 1e-9 && std::abs(built - 100.0) < 1e-9;
  return {ok, "jaccard " + fmt(j) + ", size similarity " + fmt(s) + ", coverage sum " + fmt(coverage, 6) +
                  ", pattern similarity " + fmt(ps, 2) + " / " + fmt(built, 2)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transgp acceptance suite"};
  std::string work = (fs::temp_directory_path() / "transgp_acceptance").string();
  std::vector<int> only;
  app.add_option("--work", work, "scratch directory for pipeline artifacts");
  app.add_option("--only", only, "criteria to run")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  fs::remove_all(work);
  fs::create_directories(work);
  DeskPipeline desk(work);

  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime bound
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "codec soundness", 10, codec_soundness},
      {2, "masked generation validity", 60, masked_generation},
      {3, "gradient check", 120, gradient_check_criterion},
      {4, "loss sanity", 900, [&] { return loss_sanity(desk); }},
      {5, "simulator oracle", 0, simulator_oracle},
      {6, "handcrafted ordering", 300, [&] { return handcrafted_ordering(desk); }},
      {7, "end-to-end desk-scale improvement", 2700, [&] { return desk_improvement(desk); }},
      {8, "PureTrans variance", 0, [&] { return pure_trans_variance(desk); }},
      {9, "size direction", 0, [&] { return size_direction(desk); }},
      {10, "statistics oracle", 0, statistics_oracle},
      {11, "temperature properties", 0, [&] { return temperature_properties(desk); }},
      {12, "analysis formulas", 0, analysis_formulas},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double elapsed = seconds_since(t0);
    std::string timing = fmt(elapsed, 1) + " s";
    if (c.budget_s > 0) {
      timing += " of " + fmt(c.budget_s, 0);
      if (elapsed > c.budget_s) {
        v.pass = false;
        v.detail += " [over time budget]";
      }
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " " << c.name << " (" << timing
              << "): " << v.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

#include "corpus.hpp"

#include "smartgraph/detectors.hpp"
#include "smartgraph/frontend.hpp"
#include "smartgraph/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace smartgraph;
using testsupport::corpus_dir;
using testsupport::read_text;

namespace {

std::vector<Warning> run_one(DetectorId id, const std::string& source, const KeywordConfig& cfg = {},
                             const SourceUnit* baseline = nullptr)
{
    const SourceUnit unit = load_source(source, "d.sol");
    return run_all(unit, cfg, baseline, {id});
}

bool contains(const std::string& haystack, std::string_view needle)
{
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

// ---- D1 / D11 / D12 ---------------------------------------------------------------

TEST(StakeAsymmetry, MissingUnstakeLogic)
{
    const auto ws = run_one(DetectorId::D1_stake_asymmetry, read_text(corpus_dir() / "d01_stake_asymmetry_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].message, "Inconsistent State Update: Missing Unstake Logic for totalStaked");
    EXPECT_EQ(ws[0].function, "unstake");
    EXPECT_EQ(ws[0].severity, Severity::Medium);
    EXPECT_EQ(ws[0].related_nodes,
              (std::vector<std::string>{"StakingPool.function.stake", "StakingPool.function.unstake",
                                        "StakingPool.state_var.totalStaked"}));
}

TEST(StakeAsymmetry, NoMatchingNames)
{
    EXPECT_TRUE(run_one(DetectorId::D1_stake_asymmetry,
                        "contract C { uint a; function put() public { a = 1; } function take() public { a = 0; } }")
                    .empty());
}

TEST(StakeAsymmetry, SymmetricPair)
{
    EXPECT_TRUE(run_one(DetectorId::D1_stake_asymmetry, read_text(corpus_dir() / "d01_stake_asymmetry_fixed.sol")).empty());
}

TEST(StakeAsymmetry, MissingStakeLogicAndCaseInsensitiveNames)
{
    const auto ws = run_one(DetectorId::D1_stake_asymmetry, R"sol(contract C {
    uint balances; uint penalty;
    function StakeTokens() public { balances += 1; }
    function UNSTAKE() public { balances -= 1; penalty += 1; }
})sol");
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].message, "Inconsistent State Update: Missing Stake Logic for penalty");
    EXPECT_EQ(ws[0].function, "StakeTokens");
}

TEST(StakeAsymmetry, EntryWithoutWritesIsIgnored)
{
    EXPECT_TRUE(run_one(DetectorId::D1_stake_asymmetry, R"sol(contract C {
    uint balances;
    function stake() public view returns (uint) { return balances; }
    function unstake() public { balances = 0; }
})sol")
                    .empty());
}

TEST(StakeAsymmetry, CollateralPairs)
{
    const auto ws = run_one(DetectorId::D11_collateral_logic,
                            read_text(corpus_dir() / "d11_collateral_logic_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].message, "Inconsistent State Update: Missing Repay Logic for debt");
    EXPECT_EQ(ws[0].detector, DetectorId::D11_collateral_logic);
    EXPECT_TRUE(run_one(DetectorId::D11_collateral_logic, read_text(corpus_dir() / "d11_collateral_logic_fixed.sol")).empty());
}

TEST(StakeAsymmetry, EarnSpendPairs)
{
    const auto ws = run_one(DetectorId::D12_point_system, read_text(corpus_dir() / "d12_point_system_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].message, "Inconsistent State Update: Missing Spend Logic for points");
    const auto earn = run_one(DetectorId::D12_point_system, R"sol(contract P {
    uint points; uint bonus;
    function earn() public { points += 1; }
    function claimBonus() public { points -= 1; bonus += 1; }
})sol");
    ASSERT_EQ(earn.size(), 1u);
    EXPECT_EQ(earn[0].message, "Inconsistent State Update: Missing Earn Logic for bonus");
    EXPECT_EQ(earn[0].function, "earn");
}

TEST(StakeAsymmetry, DirectPairKindApi)
{
    const SourceUnit unit = load_source(read_text(corpus_dir() / "d01_stake_asymmetry_vulnerable.sol"), "x.sol");
    EXPECT_EQ(detect_stake_asymmetry(unit.contracts[0], {}, PairKind::Stake).size(), 1u);
    EXPECT_TRUE(detect_stake_asymmetry(unit.contracts[0], {}, PairKind::Points).empty());
}

// ---- D2 ---------------------------------------------------------------------------

TEST(MissingExitValidation, BareTransfer)
{
    const auto ws = run_one(DetectorId::D2_missing_exit_validation,
                            read_text(corpus_dir() / "d02_missing_exit_validation_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].message, "High Risk: Missing Validation Logic in function withdraw");
    EXPECT_EQ(ws[0].severity, Severity::High);
    EXPECT_EQ(ws[0].related_symbols, (std::vector<std::string>{"payable(msg.sender).transfer"}));
}

TEST(MissingExitValidation, RequirePresent)
{
    EXPECT_TRUE(run_one(DetectorId::D2_missing_exit_validation, R"sol(contract V {
    mapping(address => uint) balance;
    function withdraw(uint amount) external {
        require(balance[msg.sender] >= amount);
        balance[msg.sender] -= amount;
        payable(msg.sender).transfer(amount);
    }
})sol")
                    .empty());
}

TEST(MissingExitValidation, ModifierCountsAsValidation)
{
    EXPECT_TRUE(run_one(DetectorId::D2_missing_exit_validation, R"sol(contract V {
    mapping(address => uint) rewards;
    modifier onlyStaker() { require(rewards[msg.sender] > 0); _; }
    function claimRewards() external onlyStaker {
        uint r = rewards[msg.sender];
        rewards[msg.sender] = 0;
        payable(msg.sender).transfer(r);
    }
})sol")
                    .empty());
}

TEST(MissingExitValidation, NestedCheckAndBodylessDeclarations)
{
    EXPECT_TRUE(run_one(DetectorId::D2_missing_exit_validation, R"sol(contract V {
    uint a;
    function redeem() external {
        for (uint i = 0; i < 2; i++) { if (a > i) { a = i; } }
    }
})sol")
                    .empty());
    EXPECT_TRUE(run_one(DetectorId::D2_missing_exit_validation,
                        "interface I { function withdraw(uint a) external; }")
                    .empty());
}

// ---- D3 ---------------------------------------------------------------------------

TEST(UnprotectedEntry, SetRate)
{
    const auto ws = run_one(DetectorId::D3_unprotected_entry, read_text(corpus_dir() / "d03_unprotected_entry_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].function, "setRate");
    EXPECT_TRUE(contains(ws[0].message, "Unprotected external function setRate manipulates state via param r"));
    EXPECT_EQ(ws[0].severity, Severity::High);
    EXPECT_NE(std::find(ws[0].related_symbols.begin(), ws[0].related_symbols.end(), "r"), ws[0].related_symbols.end());
}

TEST(UnprotectedEntry, GuardedSupplyUpdate)
{
    EXPECT_TRUE(run_one(DetectorId::D3_unprotected_entry, read_text(corpus_dir() / "smart_paradigm.sol")).empty());
}

TEST(UnprotectedEntry, HelperCalledInternally)
{
    EXPECT_TRUE(run_one(DetectorId::D3_unprotected_entry, R"sol(contract H {
    uint stored;
    function h(uint x) public { stored = x; }
    function run() external { h(3); }
})sol")
                    .empty());
}

TEST(UnprotectedEntry, CalledFromChildContract)
{
    EXPECT_TRUE(run_one(DetectorId::D3_unprotected_entry, R"sol(contract Base {
    uint stored;
    function h(uint x) public { stored = x; }
}
contract Child is Base {
    function run() external { super.h(3); }
})sol")
                    .empty());
}

TEST(UnprotectedEntry, MappingIndexAndEachParameter)
{
    const auto ws = run_one(DetectorId::D3_unprotected_entry, R"sol(contract M {
    mapping(address => uint) credit;
    uint last;
    function give(address who, uint amount, uint unused) public { credit[who] = amount; }
    function note(uint v) internal { last = v; }
    function guarded(uint v) external whenNotPaused { last = v; }
    function owned(uint v) external onlyAdmin { last = v; }
})sol");
    std::vector<std::string> params;
    for (const Warning& w : ws) {
        const auto at = w.message.find("via param ");
        ASSERT_NE(at, std::string::npos);
        params.push_back(w.function.value_or("") + ":" + w.message.substr(at + 10));
    }
    std::sort(params.begin(), params.end());
    EXPECT_EQ(params, (std::vector<std::string>{"give:amount", "give:who", "guarded:v"}));
}

// ---- D4 ---------------------------------------------------------------------------

TEST(PriceLag, TransferPrecedesRebase)
{
    const auto ws = run_one(DetectorId::D4_price_lag, R"sol(interface IERC20 { function transfer(address to, uint256 v) external returns (bool); }
contract S {
    IERC20 token;
    function rebase() internal {}
    function sell() external {
        token.transfer(msg.sender, 1);
        rebase();
    }
})sol");
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].function, "sell");
    EXPECT_EQ(ws[0].severity, Severity::High);
    EXPECT_TRUE(contains(ws[0].message, "Excessive logic gap between price update and transfer in sell"));
    EXPECT_TRUE(contains(ws[0].message, "transfer precedes price update"));
    EXPECT_TRUE(contains(ws[0].message, "'Flash Loan' or 'Price Manipulation' risk"));
}

TEST(PriceLag, OnlyTransfers)
{
    EXPECT_TRUE(run_one(DetectorId::D4_price_lag, R"sol(contract S {
    function pay(address payable a) external { a.transfer(1); a.transfer(2); }
})sol")
                    .empty());
}

TEST(PriceLag, DistanceBranch)
{
    const std::string src = read_text(corpus_dir() / "d04_price_lag_vulnerable.sol");
    const auto ws = run_one(DetectorId::D4_price_lag, src);
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_TRUE(contains(ws[0].message, "distance 12 statements"));
    EXPECT_FALSE(contains(ws[0].message, "precedes"));
    KeywordConfig wide;
    wide.max_distance = 12;
    EXPECT_TRUE(run_one(DetectorId::D4_price_lag, src, wide).empty());
    wide.max_distance = 11;
    EXPECT_EQ(run_one(DetectorId::D4_price_lag, src, wide).size(), 1u);
}

TEST(PriceLag, StatementDistance)
{
    EXPECT_EQ(statement_distance(3, 3), 0);
    EXPECT_EQ(statement_distance(3, 4), 0);
    EXPECT_EQ(statement_distance(0, 13), 12);
    EXPECT_EQ(statement_distance(13, 0), 12);
}

// ---- D5 ---------------------------------------------------------------------------

TEST(ExternalDependency, ScalingFactorPattern)
{
    const auto ws = run_one(DetectorId::D5_external_dependency,
                            read_text(corpus_dir() / "d05_external_dependency_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].function, "sync");
    EXPECT_EQ(ws[0].severity, Severity::Medium);
    EXPECT_TRUE(contains(ws[0].message, "totalSupply"));
}

TEST(ExternalDependency, GuardedByRequire)
{
    EXPECT_TRUE(run_one(DetectorId::D5_external_dependency,
                        read_text(corpus_dir() / "d05_external_dependency_fixed.sol"))
                    .empty());
}

TEST(ExternalDependency, NoExternalCalls)
{
    EXPECT_TRUE(run_one(DetectorId::D5_external_dependency, R"sol(contract F {
    uint fee; uint base;
    function setFee() external { fee = base.mul(2) + 1; }
})sol")
                    .empty());
}

TEST(ExternalDependency, LowLevelTaintAndIfGuard)
{
    const std::string vulnerable = R"sol(contract F {
    address oracle;
    uint256 public fee;
    function refresh() external {
        (bool ok, bytes memory data) = oracle.staticcall(abi.encodeWithSignature("fee()"));
        require(ok);
        fee = abi.decode(data, (uint256));
    }
})sol";
    EXPECT_EQ(run_one(DetectorId::D5_external_dependency, vulnerable).size(), 1u);

    const std::string guarded = R"sol(interface O { function price() external view returns (uint256); }
contract F {
    O oracle;
    uint256 public price;
    function refresh() external {
        price = oracle.price();
        if (price > 1e30) { revert(); }
    }
})sol";
    EXPECT_TRUE(run_one(DetectorId::D5_external_dependency, guarded).empty());

    const std::string uncritical = R"sol(interface O { function price() external view returns (uint256); }
contract F {
    O oracle;
    uint256 public snapshot;
    function refresh() external { snapshot = oracle.price(); }
})sol";
    EXPECT_TRUE(run_one(DetectorId::D5_external_dependency, uncritical).empty());
}

// ---- D6 ---------------------------------------------------------------------------

TEST(SupplyHooks, UnguardedMint)
{
    const auto ws = run_one(DetectorId::D6_supply_hooks, "contract T { uint totalSupply; function mint(uint a) public { totalSupply += a; } }");
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].severity, Severity::High);
    EXPECT_EQ(ws[0].message.rfind("Supply Manipulation Hook:", 0), 0u);
}

TEST(SupplyHooks, ModifierOrRequireSuppresses)
{
    EXPECT_TRUE(run_one(DetectorId::D6_supply_hooks, R"sol(contract T {
    uint totalSupply; address owner;
    modifier onlyOwner() { require(msg.sender == owner); _; }
    function mint(uint a) public onlyOwner { totalSupply += a; }
})sol")
                    .empty());
    EXPECT_TRUE(run_one(DetectorId::D6_supply_hooks, R"sol(contract T {
    uint totalSupply; mapping(address => uint) balance;
    function burn(uint a) public { require(balance[msg.sender] >= a); balance[msg.sender] -= a; totalSupply -= a; }
})sol")
                    .empty());
    EXPECT_TRUE(run_one(DetectorId::D6_supply_hooks,
                        "contract T { uint minted; function mint(uint a) public { minted += a; } }")
                    .empty());
}

// ---- D7 ---------------------------------------------------------------------------

TEST(ComplexCalculation, SixChainedCalls)
{
    const auto ws = run_one(DetectorId::D7_complex_calculation,
                            read_text(corpus_dir() / "d07_complex_calculation_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].severity, Severity::Info);
    EXPECT_EQ(ws[0].line, 9);
}

TEST(ComplexCalculation, OperatorCountBoundary)
{
    EXPECT_TRUE(run_one(DetectorId::D7_complex_calculation, read_text(corpus_dir() / "smart_paradigm.sol")).empty());
    EXPECT_TRUE(run_one(DetectorId::D7_complex_calculation,
                        read_text(corpus_dir() / "d07_complex_calculation_fixed.sol"))
                    .empty());
    const std::string operators = R"sol(contract C {
    uint a; uint b;
    function f(uint x) public { a = x + x - x * x / x % x + x; b = 1; }
    function g(uint x) public { a = x + x - x * x / x % x; b = 1; }
    function h(uint x) public { a = x + x - x * x / x % x + x; }
})sol";
    const auto ws = run_one(DetectorId::D7_complex_calculation, operators);
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].function, "f");
}

// ---- D8 ---------------------------------------------------------------------------

TEST(UncheckedLowLevel, BareCall)
{
    const auto ws = run_one(DetectorId::D8_unchecked_low_level,
                            read_text(corpus_dir() / "d08_unchecked_low_level_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].severity, Severity::High);
    EXPECT_TRUE(contains(ws[0].message, "the logical validity of state reversions"));
}

TEST(UncheckedLowLevel, ConsumedResults)
{
    EXPECT_TRUE(run_one(DetectorId::D8_unchecked_low_level, R"sol(contract L {
    address addr;
    function a(bytes calldata data) external { (bool ok,) = addr.call(data); require(ok); }
    function b(address payable x, uint v) external { payable(x).transfer(v); }
    function c(address payable x) external { require(x.send(1)); }
    function d(address payable x) external { if (!x.send(1)) { revert(); } }
    function e(bytes calldata data) external { bool ok; (ok, ) = addr.delegatecall(data); assert(ok); }
})sol")
                    .empty());
}

// ---- D9 ---------------------------------------------------------------------------

TEST(NamingAmbiguity, OwnerOwners)
{
    const auto ws = run_one(DetectorId::D9_naming_ambiguity, read_text(corpus_dir() / "d09_naming_ambiguity_vulnerable.sol"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].severity, Severity::Medium);
    EXPECT_EQ(ws[0].related_symbols, (std::vector<std::string>{"owner", "owners"}));
    EXPECT_FALSE(ws[0].function.has_value());
}

TEST(NamingAmbiguity, UniqueNames)
{
    EXPECT_TRUE(run_one(DetectorId::D9_naming_ambiguity, read_text(corpus_dir() / "d09_naming_ambiguity_fixed.sol")).empty());
}

TEST(NamingAmbiguity, ThreeNamesExhaustive)
{
    const std::vector<std::string> names = {"balance", "balances", "_balance"};
    // Oracle: enumerate the three pairs and apply the rule by hand.
    std::set<std::pair<std::string, Severity>> expected;
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            std::string a = names[i];
            std::string b = names[j];
            auto bare = [](std::string s) { return s.substr(s.find_first_not_of('_')); };
            if (bare(a) == bare(b)) {
                expected.emplace(a + "|" + b, Severity::Info);
            } else if (a[0] == b[0] && edit_distance(a, b) <= 1) {
                expected.emplace(a + "|" + b, Severity::Medium);
            }
        }
    }
    ASSERT_EQ(expected.size(), 2u);

    const auto ws = run_one(DetectorId::D9_naming_ambiguity, R"sol(contract B {
    uint balance;
    mapping(address => uint) balances;
    uint _balance;
})sol");
    std::set<std::pair<std::string, Severity>> actual;
    for (const Warning& w : ws) {
        actual.emplace(w.related_symbols[0] + "|" + w.related_symbols[1], w.severity);
    }
    EXPECT_EQ(actual, expected);
}

TEST(NamingAmbiguity, EditDistance)
{
    EXPECT_EQ(edit_distance("", ""), 0);
    EXPECT_EQ(edit_distance("owner", "owners"), 1);
    EXPECT_EQ(edit_distance("kitten", "sitting"), 3);
    EXPECT_EQ(edit_distance("abc", ""), 3);
}

// ---- D10 --------------------------------------------------------------------------

TEST(LegacySignature, ChangedParameters)
{
    const SourceUnit baseline = load_source(read_text(corpus_dir() / "baselines" / "d10_legacy_signature_vulnerable.sol"), "b.sol");
    const auto ws = run_one(DetectorId::D10_legacy_signature,
                            read_text(corpus_dir() / "d10_legacy_signature_vulnerable.sol"), {}, &baseline);
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].severity, Severity::Medium);
    EXPECT_TRUE(contains(ws[0].message, "withdraw(uint256,address payable)"));
}

TEST(LegacySignature, IdenticalUnits)
{
    const std::string src = read_text(corpus_dir() / "d10_legacy_signature_fixed.sol");
    const SourceUnit baseline = load_source(src, "b.sol");
    EXPECT_TRUE(run_one(DetectorId::D10_legacy_signature, src, {}, &baseline).empty());
}

TEST(LegacySignature, RemovedFinancialFunction)
{
    const SourceUnit baseline = load_source(R"sol(contract R {
    uint a;
    function claim() external { a = 0; }
    function ping() external {}
})sol",
                                            "b.sol");
    const auto ws = run_one(DetectorId::D10_legacy_signature, "contract R { uint a; }", {}, &baseline);
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].severity, Severity::High);
    EXPECT_TRUE(contains(ws[0].message, "removed financial function"));
}

TEST(LegacySignature, MutabilityAndTypeAliases)
{
    const SourceUnit baseline = load_source(
        "contract R { function f(uint a) external {} function g(uint[] memory a) public view returns (uint) {} }", "b.sol");
    EXPECT_TRUE(run_one(DetectorId::D10_legacy_signature,
                        "contract R { function f(uint256 x) external {} function g(uint256[] memory b) public view returns (uint) {} }",
                        {}, &baseline)
                    .empty());
    EXPECT_EQ(run_one(DetectorId::D10_legacy_signature,
                      "contract R { function f(uint256 x) external payable {} function g(uint[] memory a) public view returns (uint) {} }",
                      {}, &baseline)
                  .size(),
              1u);
}

TEST(LegacySignature, SkippedWithoutBaseline)
{
    EXPECT_TRUE(run_one(DetectorId::D10_legacy_signature,
                        read_text(corpus_dir() / "d10_legacy_signature_vulnerable.sol"))
                    .empty());
}

// ---- run_all ----------------------------------------------------------------------

TEST(RunAll, SimpleAuctionIsClean)
{
    const SourceUnit unit = load_source(read_text(corpus_dir() / "simple_auction.sol"), "a.sol");
    const std::set<DetectorId> all(std::begin(kAllDetectors), std::end(kAllDetectors));
    EXPECT_TRUE(run_all(unit, {}, nullptr, all).empty());
}

TEST(RunAll, EmptySelection)
{
    const SourceUnit unit = load_source(read_text(corpus_dir() / "syfi_rebase.sol"), "s.sol");
    EXPECT_TRUE(run_all(unit, {}, nullptr, {}).empty());
}

TEST(RunAll, SyfiFixture)
{
    const auto analysis = testsupport::analyze_fixture(corpus_dir() / "syfi_rebase.sol");
    EXPECT_EQ(testsupport::warning_keys(analysis.warnings),
              (std::vector<std::string>{"D4_price_lag SoftYearn sell 22", "D5_external_dependency SoftYearn rebase 26"}));
}

TEST(RunAll, SortedAndNodesResolve)
{
    const std::string src = read_text(corpus_dir() / "d04_price_lag_vulnerable.sol") +
                            read_text(corpus_dir() / "d09_naming_ambiguity_vulnerable.sol");
    const SourceUnit unit = load_source(src, "m.sol");
    const std::set<DetectorId> all(std::begin(kAllDetectors), std::end(kAllDetectors));
    const auto ws = run_all(unit, {}, nullptr, all);
    ASSERT_EQ(ws.size(), 2u);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end(), warning_less));
    EXPECT_EQ(ws[0].contract, "PriceLag");
    for (const Warning& w : ws) {
        const DependencyGraph g = build_graph(*unit.find_contract(w.contract));
        for (const std::string& id : w.related_nodes) {
            EXPECT_TRUE(g.has_node(id)) << id;
        }
        EXPECT_EQ(w.category, category_of(w.detector));
    }
}

TEST(RunAll, InvalidConfigurationRejected)
{
    const SourceUnit unit = load_source("contract C {}", "c.sol");
    KeywordConfig bad;
    bad.max_distance = 0;
    EXPECT_THROW((void)run_all(unit, bad, nullptr, {DetectorId::D4_price_lag}), ConfigError);
}

TEST(DetectorIds, ParsingAndNames)
{
    EXPECT_EQ(parse_detector_ids({"D4", "D2_missing_exit_validation", "d12"}),
              (std::set<DetectorId>{DetectorId::D4_price_lag, DetectorId::D2_missing_exit_validation,
                                    DetectorId::D12_point_system}));
    EXPECT_THROW((void)parse_detector_ids({"D13"}), ConfigError);
    EXPECT_THROW((void)parse_detector_ids({"price_lag"}), ConfigError);
    for (DetectorId id : kAllDetectors) {
        EXPECT_EQ(detector_from_string(to_string(id)), id);
        EXPECT_FALSE(category_of(id).empty());
    }
    EXPECT_EQ(to_string(DetectorId::D2_missing_exit_validation), "D2_missing_exit_validation");
}

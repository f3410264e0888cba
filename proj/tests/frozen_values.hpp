#pragma once

// Reference values produced by tests/oracle/mp_oracle.hpp at 50 significant
// digits and frozen here. test_oracle.cpp recomputes them.

namespace frozen {

/// 2F1(1/4, 3/4; 1; -0.2)
inline constexpr const char* kF_quarter_m02 = "0.9661116247264308211255748936311757895439";
/// 2F1(1/4, 3/4; 1; -1e6)
inline constexpr const char* kF_quarter_m1e6 = "0.03731711450066969283963153567046269950657";
/// 3F2(1/2, 1/2, 1/2; 1, 1; 0.5)
inline constexpr const char* k3F2_half = "1.081544554559937186096290086954379780919";
/// K at squared modulus -1
inline constexpr const char* kK_m1 = "1.311028777146059905232419794945559706841";
/// 2F1(1/2, 1/2; 1; 1/2)
inline constexpr const char* kF_half_half = "1.180340599016096226045337940558488587234";

inline constexpr double F_quarter_m02 = 0.96611162472643082112557489363117579;
inline constexpr double F_quarter_m1e6 = 0.037317114500669692839631535670462700;
inline constexpr double F3F2_half = 1.0815445545599371860962900869543798;
inline constexpr double K_m1 = 1.3110287771460599052324197949455597;
inline constexpr double F_half_half = 1.1803405990160962260453379405584886;

}  // namespace frozen

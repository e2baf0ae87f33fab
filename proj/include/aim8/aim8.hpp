#ifndef AIM8_AIM8_HPP
#define AIM8_AIM8_HPP

#include "evaluator.hpp"
#include "fexpr.hpp"
#include "kernel_list.hpp"
#include "kernel_pair.hpp"
#include "metacircular.hpp"
#include "sexpr.hpp"
#include "source.hpp"
#include "symbol.hpp"
#include "translate.hpp"
#include "value.hpp"

#endif

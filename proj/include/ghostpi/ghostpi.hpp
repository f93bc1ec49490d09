#pragma once

#include "ghostpi/abelian.hpp"
#include "ghostpi/action.hpp"
#include "ghostpi/builders.hpp"
#include "ghostpi/compare.hpp"
#include "ghostpi/complex.hpp"
#include "ghostpi/error.hpp"
#include "ghostpi/fingerprint.hpp"
#include "ghostpi/finite_group.hpp"
#include "ghostpi/ghost.hpp"
#include "ghostpi/gog.hpp"
#include "ghostpi/group_catalog.hpp"
#include "ghostpi/homs.hpp"
#include "ghostpi/oracle.hpp"
#include "ghostpi/presentation.hpp"
#include "ghostpi/prodiscrete.hpp"
#include "ghostpi/tietze.hpp"
#include "ghostpi/word.hpp"

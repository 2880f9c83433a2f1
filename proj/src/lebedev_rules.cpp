// Generated by tools/gen_lebedev.py from scipy.integrate.lebedev_rule. Do not edit.
#include "tat/recon.hpp"

#include <stdexcept>

namespace tat {

namespace {

const double kRule110[][4] = {
  {1, 0, 0, 0.048107465851396594},
  {-1, 0, 0, 0.048107465851396594},
  {0, 1, 0, 0.048107465851396594},
  {0, -1, 0, 0.048107465851396594},
  {0, 0, 1, 0.048107465851396594},
  {0, 0, -1, 0.048107465851396594},
  {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
  {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
  {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
  {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
  {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.12307173528167017},
  {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
  {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
  {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.12307173528167017},
  {0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
  {-0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
  {0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
  {0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
  {-0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.10319173408833041},
  {-0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
  {0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
  {-0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.10319173408833041},
  {-0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
  {0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
  {0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
  {-0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
  {-0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
  {0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
  {-0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.10319173408833041},
  {0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.10319173408833041},
  {0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
  {-0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
  {0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
  {0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
  {-0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.10319173408833041},
  {-0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
  {0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
  {-0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.10319173408833041},
  {0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
  {-0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
  {0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
  {0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
  {-0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.1249450968725133},
  {-0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
  {0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
  {-0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.1249450968725133},
  {-0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
  {0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
  {0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
  {-0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
  {-0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
  {0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
  {-0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.1249450968725133},
  {0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.1249450968725133},
  {0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
  {-0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
  {0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
  {0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
  {-0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.1249450968725133},
  {-0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
  {0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
  {-0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.1249450968725133},
  {0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
  {-0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
  {0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
  {0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
  {-0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.12058024902852789},
  {-0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
  {0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
  {-0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.12058024902852789},
  {-0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
  {0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
  {0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
  {-0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
  {-0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
  {0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
  {-0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.12058024902852789},
  {0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.12058024902852789},
  {0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
  {-0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
  {0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
  {0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
  {-0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.12058024902852789},
  {-0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
  {0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
  {-0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.12058024902852789},
  {0.47836902881215021, 0.87815891060406615, 0, 0.12183091738552138},
  {-0.47836902881215021, 0.87815891060406615, 0, 0.12183091738552138},
  {0.47836902881215021, -0.87815891060406615, 0, 0.12183091738552138},
  {-0.47836902881215021, -0.87815891060406615, 0, 0.12183091738552138},
  {0.87815891060406615, 0.47836902881215021, 0, 0.12183091738552138},
  {-0.87815891060406615, 0.47836902881215021, 0, 0.12183091738552138},
  {0.87815891060406615, -0.47836902881215021, 0, 0.12183091738552138},
  {-0.87815891060406615, -0.47836902881215021, 0, 0.12183091738552138},
  {0.47836902881215021, 0, 0.87815891060406615, 0.12183091738552138},
  {-0.47836902881215021, 0, 0.87815891060406615, 0.12183091738552138},
  {0.47836902881215021, 0, -0.87815891060406615, 0.12183091738552138},
  {-0.47836902881215021, 0, -0.87815891060406615, 0.12183091738552138},
  {0.87815891060406615, 0, 0.47836902881215021, 0.12183091738552138},
  {-0.87815891060406615, 0, 0.47836902881215021, 0.12183091738552138},
  {0.87815891060406615, 0, -0.47836902881215021, 0.12183091738552138},
  {-0.87815891060406615, 0, -0.47836902881215021, 0.12183091738552138},
  {0, 0.47836902881215021, 0.87815891060406615, 0.12183091738552138},
  {0, -0.47836902881215021, 0.87815891060406615, 0.12183091738552138},
  {0, 0.47836902881215021, -0.87815891060406615, 0.12183091738552138},
  {0, -0.47836902881215021, -0.87815891060406615, 0.12183091738552138},
  {0, 0.87815891060406615, 0.47836902881215021, 0.12183091738552138},
  {0, -0.87815891060406615, 0.47836902881215021, 0.12183091738552138},
  {0, 0.87815891060406615, -0.47836902881215021, 0.12183091738552138},
  {0, -0.87815891060406615, -0.47836902881215021, 0.12183091738552138},
};

const double kRule302[][4] = {
  {1, 0, 0, 0.010739109397555787},
  {-1, 0, 0, 0.010739109397555787},
  {0, 1, 0, 0.010739109397555787},
  {0, -1, 0, 0.010739109397555787},
  {0, 0, 1, 0.010739109397555787},
  {0, 0, -1, 0.010739109397555787},
  {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.045227866820918727},
  {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.045227866820918727},
  {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.045227866820918727},
  {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.045227866820918727},
  {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.045227866820918727},
  {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.045227866820918727},
  {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.045227866820918727},
  {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.045227866820918727},
  {0.35156403455701052, 0.35156403455701052, 0.86764362454408339, 0.043351319880953879},
  {-0.35156403455701052, 0.35156403455701052, 0.86764362454408339, 0.043351319880953879},
  {0.35156403455701052, -0.35156403455701052, 0.86764362454408339, 0.043351319880953879},
  {0.35156403455701052, 0.35156403455701052, -0.86764362454408339, 0.043351319880953879},
  {-0.35156403455701052, -0.35156403455701052, 0.86764362454408339, 0.043351319880953879},
  {-0.35156403455701052, 0.35156403455701052, -0.86764362454408339, 0.043351319880953879},
  {0.35156403455701052, -0.35156403455701052, -0.86764362454408339, 0.043351319880953879},
  {-0.35156403455701052, -0.35156403455701052, -0.86764362454408339, 0.043351319880953879},
  {-0.35156403455701052, 0.86764362454408339, 0.35156403455701052, 0.043351319880953879},
  {0.35156403455701052, -0.86764362454408339, 0.35156403455701052, 0.043351319880953879},
  {0.35156403455701052, 0.86764362454408339, -0.35156403455701052, 0.043351319880953879},
  {-0.35156403455701052, -0.86764362454408339, 0.35156403455701052, 0.043351319880953879},
  {-0.35156403455701052, 0.86764362454408339, -0.35156403455701052, 0.043351319880953879},
  {0.35156403455701052, -0.86764362454408339, -0.35156403455701052, 0.043351319880953879},
  {-0.35156403455701052, -0.86764362454408339, -0.35156403455701052, 0.043351319880953879},
  {0.35156403455701052, 0.86764362454408339, 0.35156403455701052, 0.043351319880953879},
  {0.86764362454408339, 0.35156403455701052, 0.35156403455701052, 0.043351319880953879},
  {-0.86764362454408339, 0.35156403455701052, 0.35156403455701052, 0.043351319880953879},
  {0.86764362454408339, -0.35156403455701052, 0.35156403455701052, 0.043351319880953879},
  {0.86764362454408339, 0.35156403455701052, -0.35156403455701052, 0.043351319880953879},
  {-0.86764362454408339, -0.35156403455701052, 0.35156403455701052, 0.043351319880953879},
  {-0.86764362454408339, 0.35156403455701052, -0.35156403455701052, 0.043351319880953879},
  {0.86764362454408339, -0.35156403455701052, -0.35156403455701052, 0.043351319880953879},
  {-0.86764362454408339, -0.35156403455701052, -0.35156403455701052, 0.043351319880953879},
  {0.65663294102196124, 0.65663294102196124, 0.37103417838482095, 0.045299536808460591},
  {-0.65663294102196124, 0.65663294102196124, 0.37103417838482095, 0.045299536808460591},
  {0.65663294102196124, -0.65663294102196124, 0.37103417838482095, 0.045299536808460591},
  {0.65663294102196124, 0.65663294102196124, -0.37103417838482095, 0.045299536808460591},
  {-0.65663294102196124, -0.65663294102196124, 0.37103417838482095, 0.045299536808460591},
  {-0.65663294102196124, 0.65663294102196124, -0.37103417838482095, 0.045299536808460591},
  {0.65663294102196124, -0.65663294102196124, -0.37103417838482095, 0.045299536808460591},
  {-0.65663294102196124, -0.65663294102196124, -0.37103417838482095, 0.045299536808460591},
  {-0.65663294102196124, 0.37103417838482095, 0.65663294102196124, 0.045299536808460591},
  {0.65663294102196124, -0.37103417838482095, 0.65663294102196124, 0.045299536808460591},
  {0.65663294102196124, 0.37103417838482095, -0.65663294102196124, 0.045299536808460591},
  {-0.65663294102196124, -0.37103417838482095, 0.65663294102196124, 0.045299536808460591},
  {-0.65663294102196124, 0.37103417838482095, -0.65663294102196124, 0.045299536808460591},
  {0.65663294102196124, -0.37103417838482095, -0.65663294102196124, 0.045299536808460591},
  {-0.65663294102196124, -0.37103417838482095, -0.65663294102196124, 0.045299536808460591},
  {0.65663294102196124, 0.37103417838482095, 0.65663294102196124, 0.045299536808460591},
  {0.37103417838482095, 0.65663294102196124, 0.65663294102196124, 0.045299536808460591},
  {-0.37103417838482095, 0.65663294102196124, 0.65663294102196124, 0.045299536808460591},
  {0.37103417838482095, -0.65663294102196124, 0.65663294102196124, 0.045299536808460591},
  {0.37103417838482095, 0.65663294102196124, -0.65663294102196124, 0.045299536808460591},
  {-0.37103417838482095, -0.65663294102196124, 0.65663294102196124, 0.045299536808460591},
  {-0.37103417838482095, 0.65663294102196124, -0.65663294102196124, 0.045299536808460591},
  {0.37103417838482095, -0.65663294102196124, -0.65663294102196124, 0.045299536808460591},
  {-0.37103417838482095, -0.65663294102196124, -0.65663294102196124, 0.045299536808460591},
  {0.47290541325810048, 0.47290541325810048, 0.74345204298755574, 0.044946510516838671},
  {-0.47290541325810048, 0.47290541325810048, 0.74345204298755574, 0.044946510516838671},
  {0.47290541325810048, -0.47290541325810048, 0.74345204298755574, 0.044946510516838671},
  {0.47290541325810048, 0.47290541325810048, -0.74345204298755574, 0.044946510516838671},
  {-0.47290541325810048, -0.47290541325810048, 0.74345204298755574, 0.044946510516838671},
  {-0.47290541325810048, 0.47290541325810048, -0.74345204298755574, 0.044946510516838671},
  {0.47290541325810048, -0.47290541325810048, -0.74345204298755574, 0.044946510516838671},
  {-0.47290541325810048, -0.47290541325810048, -0.74345204298755574, 0.044946510516838671},
  {-0.47290541325810048, 0.74345204298755574, 0.47290541325810048, 0.044946510516838671},
  {0.47290541325810048, -0.74345204298755574, 0.47290541325810048, 0.044946510516838671},
  {0.47290541325810048, 0.74345204298755574, -0.47290541325810048, 0.044946510516838671},
  {-0.47290541325810048, -0.74345204298755574, 0.47290541325810048, 0.044946510516838671},
  {-0.47290541325810048, 0.74345204298755574, -0.47290541325810048, 0.044946510516838671},
  {0.47290541325810048, -0.74345204298755574, -0.47290541325810048, 0.044946510516838671},
  {-0.47290541325810048, -0.74345204298755574, -0.47290541325810048, 0.044946510516838671},
  {0.47290541325810048, 0.74345204298755574, 0.47290541325810048, 0.044946510516838671},
  {0.74345204298755574, 0.47290541325810048, 0.47290541325810048, 0.044946510516838671},
  {-0.74345204298755574, 0.47290541325810048, 0.47290541325810048, 0.044946510516838671},
  {0.74345204298755574, -0.47290541325810048, 0.47290541325810048, 0.044946510516838671},
  {0.74345204298755574, 0.47290541325810048, -0.47290541325810048, 0.044946510516838671},
  {-0.74345204298755574, -0.47290541325810048, 0.47290541325810048, 0.044946510516838671},
  {-0.74345204298755574, 0.47290541325810048, -0.47290541325810048, 0.044946510516838671},
  {0.74345204298755574, -0.47290541325810048, -0.47290541325810048, 0.044946510516838671},
  {-0.74345204298755574, -0.47290541325810048, -0.47290541325810048, 0.044946510516838671},
  {0.096183085226147838, 0.096183085226147838, 0.9907056213794081, 0.029557378086976182},
  {-0.096183085226147838, 0.096183085226147838, 0.9907056213794081, 0.029557378086976182},
  {0.096183085226147838, -0.096183085226147838, 0.9907056213794081, 0.029557378086976182},
  {0.096183085226147838, 0.096183085226147838, -0.9907056213794081, 0.029557378086976182},
  {-0.096183085226147838, -0.096183085226147838, 0.9907056213794081, 0.029557378086976182},
  {-0.096183085226147838, 0.096183085226147838, -0.9907056213794081, 0.029557378086976182},
  {0.096183085226147838, -0.096183085226147838, -0.9907056213794081, 0.029557378086976182},
  {-0.096183085226147838, -0.096183085226147838, -0.9907056213794081, 0.029557378086976182},
  {-0.096183085226147838, 0.9907056213794081, 0.096183085226147838, 0.029557378086976182},
  {0.096183085226147838, -0.9907056213794081, 0.096183085226147838, 0.029557378086976182},
  {0.096183085226147838, 0.9907056213794081, -0.096183085226147838, 0.029557378086976182},
  {-0.096183085226147838, -0.9907056213794081, 0.096183085226147838, 0.029557378086976182},
  {-0.096183085226147838, 0.9907056213794081, -0.096183085226147838, 0.029557378086976182},
  {0.096183085226147838, -0.9907056213794081, -0.096183085226147838, 0.029557378086976182},
  {-0.096183085226147838, -0.9907056213794081, -0.096183085226147838, 0.029557378086976182},
  {0.096183085226147838, 0.9907056213794081, 0.096183085226147838, 0.029557378086976182},
  {0.9907056213794081, 0.096183085226147838, 0.096183085226147838, 0.029557378086976182},
  {-0.9907056213794081, 0.096183085226147838, 0.096183085226147838, 0.029557378086976182},
  {0.9907056213794081, -0.096183085226147838, 0.096183085226147838, 0.029557378086976182},
  {0.9907056213794081, 0.096183085226147838, -0.096183085226147838, 0.029557378086976182},
  {-0.9907056213794081, -0.096183085226147838, 0.096183085226147838, 0.029557378086976182},
  {-0.9907056213794081, 0.096183085226147838, -0.096183085226147838, 0.029557378086976182},
  {0.9907056213794081, -0.096183085226147838, -0.096183085226147838, 0.029557378086976182},
  {-0.9907056213794081, -0.096183085226147838, -0.096183085226147838, 0.029557378086976182},
  {0.22196452362941779, 0.22196452362941779, 0.94945431722644313, 0.039068257158919401},
  {-0.22196452362941779, 0.22196452362941779, 0.94945431722644313, 0.039068257158919401},
  {0.22196452362941779, -0.22196452362941779, 0.94945431722644313, 0.039068257158919401},
  {0.22196452362941779, 0.22196452362941779, -0.94945431722644313, 0.039068257158919401},
  {-0.22196452362941779, -0.22196452362941779, 0.94945431722644313, 0.039068257158919401},
  {-0.22196452362941779, 0.22196452362941779, -0.94945431722644313, 0.039068257158919401},
  {0.22196452362941779, -0.22196452362941779, -0.94945431722644313, 0.039068257158919401},
  {-0.22196452362941779, -0.22196452362941779, -0.94945431722644313, 0.039068257158919401},
  {-0.22196452362941779, 0.94945431722644313, 0.22196452362941779, 0.039068257158919401},
  {0.22196452362941779, -0.94945431722644313, 0.22196452362941779, 0.039068257158919401},
  {0.22196452362941779, 0.94945431722644313, -0.22196452362941779, 0.039068257158919401},
  {-0.22196452362941779, -0.94945431722644313, 0.22196452362941779, 0.039068257158919401},
  {-0.22196452362941779, 0.94945431722644313, -0.22196452362941779, 0.039068257158919401},
  {0.22196452362941779, -0.94945431722644313, -0.22196452362941779, 0.039068257158919401},
  {-0.22196452362941779, -0.94945431722644313, -0.22196452362941779, 0.039068257158919401},
  {0.22196452362941779, 0.94945431722644313, 0.22196452362941779, 0.039068257158919401},
  {0.94945431722644313, 0.22196452362941779, 0.22196452362941779, 0.039068257158919401},
  {-0.94945431722644313, 0.22196452362941779, 0.22196452362941779, 0.039068257158919401},
  {0.94945431722644313, -0.22196452362941779, 0.22196452362941779, 0.039068257158919401},
  {0.94945431722644313, 0.22196452362941779, -0.22196452362941779, 0.039068257158919401},
  {-0.94945431722644313, -0.22196452362941779, 0.22196452362941779, 0.039068257158919401},
  {-0.94945431722644313, 0.22196452362941779, -0.22196452362941779, 0.039068257158919401},
  {0.94945431722644313, -0.22196452362941779, -0.22196452362941779, 0.039068257158919401},
  {-0.94945431722644313, -0.22196452362941779, -0.22196452362941779, 0.039068257158919401},
  {0.70117664160895454, 0.70117664160895454, 0.12923867271051442, 0.045867828378660352},
  {-0.70117664160895454, 0.70117664160895454, 0.12923867271051442, 0.045867828378660352},
  {0.70117664160895454, -0.70117664160895454, 0.12923867271051442, 0.045867828378660352},
  {0.70117664160895454, 0.70117664160895454, -0.12923867271051442, 0.045867828378660352},
  {-0.70117664160895454, -0.70117664160895454, 0.12923867271051442, 0.045867828378660352},
  {-0.70117664160895454, 0.70117664160895454, -0.12923867271051442, 0.045867828378660352},
  {0.70117664160895454, -0.70117664160895454, -0.12923867271051442, 0.045867828378660352},
  {-0.70117664160895454, -0.70117664160895454, -0.12923867271051442, 0.045867828378660352},
  {-0.70117664160895454, 0.12923867271051442, 0.70117664160895454, 0.045867828378660352},
  {0.70117664160895454, -0.12923867271051442, 0.70117664160895454, 0.045867828378660352},
  {0.70117664160895454, 0.12923867271051442, -0.70117664160895454, 0.045867828378660352},
  {-0.70117664160895454, -0.12923867271051442, 0.70117664160895454, 0.045867828378660352},
  {-0.70117664160895454, 0.12923867271051442, -0.70117664160895454, 0.045867828378660352},
  {0.70117664160895454, -0.12923867271051442, -0.70117664160895454, 0.045867828378660352},
  {-0.70117664160895454, -0.12923867271051442, -0.70117664160895454, 0.045867828378660352},
  {0.70117664160895454, 0.12923867271051442, 0.70117664160895454, 0.045867828378660352},
  {0.12923867271051442, 0.70117664160895454, 0.70117664160895454, 0.045867828378660352},
  {-0.12923867271051442, 0.70117664160895454, 0.70117664160895454, 0.045867828378660352},
  {0.12923867271051442, -0.70117664160895454, 0.70117664160895454, 0.045867828378660352},
  {0.12923867271051442, 0.70117664160895454, -0.70117664160895454, 0.045867828378660352},
  {-0.12923867271051442, -0.70117664160895454, 0.70117664160895454, 0.045867828378660352},
  {-0.12923867271051442, 0.70117664160895454, -0.70117664160895454, 0.045867828378660352},
  {0.12923867271051442, -0.70117664160895454, -0.70117664160895454, 0.045867828378660352},
  {-0.12923867271051442, -0.70117664160895454, -0.70117664160895454, 0.045867828378660352},
  {0.26441528870606629, 0.96440891487920599, 0, 0.037477252107084247},
  {-0.26441528870606629, 0.96440891487920599, 0, 0.037477252107084247},
  {0.26441528870606629, -0.96440891487920599, 0, 0.037477252107084247},
  {-0.26441528870606629, -0.96440891487920599, 0, 0.037477252107084247},
  {0.96440891487920599, 0.26441528870606629, 0, 0.037477252107084247},
  {-0.96440891487920599, 0.26441528870606629, 0, 0.037477252107084247},
  {0.96440891487920599, -0.26441528870606629, 0, 0.037477252107084247},
  {-0.96440891487920599, -0.26441528870606629, 0, 0.037477252107084247},
  {0.26441528870606629, 0, 0.96440891487920599, 0.037477252107084247},
  {-0.26441528870606629, 0, 0.96440891487920599, 0.037477252107084247},
  {0.26441528870606629, 0, -0.96440891487920599, 0.037477252107084247},
  {-0.26441528870606629, 0, -0.96440891487920599, 0.037477252107084247},
  {0.96440891487920599, 0, 0.26441528870606629, 0.037477252107084247},
  {-0.96440891487920599, 0, 0.26441528870606629, 0.037477252107084247},
  {0.96440891487920599, 0, -0.26441528870606629, 0.037477252107084247},
  {-0.96440891487920599, 0, -0.26441528870606629, 0.037477252107084247},
  {0, 0.26441528870606629, 0.96440891487920599, 0.037477252107084247},
  {0, -0.26441528870606629, 0.96440891487920599, 0.037477252107084247},
  {0, 0.26441528870606629, -0.96440891487920599, 0.037477252107084247},
  {0, -0.26441528870606629, -0.96440891487920599, 0.037477252107084247},
  {0, 0.96440891487920599, 0.26441528870606629, 0.037477252107084247},
  {0, -0.96440891487920599, 0.26441528870606629, 0.037477252107084247},
  {0, 0.96440891487920599, -0.26441528870606629, 0.037477252107084247},
  {0, -0.96440891487920599, -0.26441528870606629, 0.037477252107084247},
  {0.57189558918789607, 0.82032641982775933, 0, 0.045249250350174325},
  {-0.57189558918789607, 0.82032641982775933, 0, 0.045249250350174325},
  {0.57189558918789607, -0.82032641982775933, 0, 0.045249250350174325},
  {-0.57189558918789607, -0.82032641982775933, 0, 0.045249250350174325},
  {0.82032641982775933, 0.57189558918789607, 0, 0.045249250350174325},
  {-0.82032641982775933, 0.57189558918789607, 0, 0.045249250350174325},
  {0.82032641982775933, -0.57189558918789607, 0, 0.045249250350174325},
  {-0.82032641982775933, -0.57189558918789607, 0, 0.045249250350174325},
  {0.57189558918789607, 0, 0.82032641982775933, 0.045249250350174325},
  {-0.57189558918789607, 0, 0.82032641982775933, 0.045249250350174325},
  {0.57189558918789607, 0, -0.82032641982775933, 0.045249250350174325},
  {-0.57189558918789607, 0, -0.82032641982775933, 0.045249250350174325},
  {0.82032641982775933, 0, 0.57189558918789607, 0.045249250350174325},
  {-0.82032641982775933, 0, 0.57189558918789607, 0.045249250350174325},
  {0.82032641982775933, 0, -0.57189558918789607, 0.045249250350174325},
  {-0.82032641982775933, 0, -0.57189558918789607, 0.045249250350174325},
  {0, 0.57189558918789607, 0.82032641982775933, 0.045249250350174325},
  {0, -0.57189558918789607, 0.82032641982775933, 0.045249250350174325},
  {0, 0.57189558918789607, -0.82032641982775933, 0.045249250350174325},
  {0, -0.57189558918789607, -0.82032641982775933, 0.045249250350174325},
  {0, 0.82032641982775933, 0.57189558918789607, 0.045249250350174325},
  {0, -0.82032641982775933, 0.57189558918789607, 0.045249250350174325},
  {0, 0.82032641982775933, -0.57189558918789607, 0.045249250350174325},
  {0, -0.82032641982775933, -0.57189558918789607, 0.045249250350174325},
  {0.25100347517704652, 0.80007274940739515, 0.54486773725807736, 0.044881302269213164},
  {-0.25100347517704652, 0.80007274940739515, 0.54486773725807736, 0.044881302269213164},
  {0.25100347517704652, -0.80007274940739515, 0.54486773725807736, 0.044881302269213164},
  {0.25100347517704652, 0.80007274940739515, -0.54486773725807736, 0.044881302269213164},
  {-0.25100347517704652, -0.80007274940739515, 0.54486773725807736, 0.044881302269213164},
  {0.25100347517704652, -0.80007274940739515, -0.54486773725807736, 0.044881302269213164},
  {-0.25100347517704652, 0.80007274940739515, -0.54486773725807736, 0.044881302269213164},
  {-0.25100347517704652, -0.80007274940739515, -0.54486773725807736, 0.044881302269213164},
  {0.80007274940739515, 0.25100347517704652, 0.54486773725807736, 0.044881302269213164},
  {-0.80007274940739515, 0.25100347517704652, 0.54486773725807736, 0.044881302269213164},
  {0.80007274940739515, -0.25100347517704652, 0.54486773725807736, 0.044881302269213164},
  {0.80007274940739515, 0.25100347517704652, -0.54486773725807736, 0.044881302269213164},
  {-0.80007274940739515, -0.25100347517704652, 0.54486773725807736, 0.044881302269213164},
  {0.80007274940739515, -0.25100347517704652, -0.54486773725807736, 0.044881302269213164},
  {-0.80007274940739515, 0.25100347517704652, -0.54486773725807736, 0.044881302269213164},
  {-0.80007274940739515, -0.25100347517704652, -0.54486773725807736, 0.044881302269213164},
  {0.54486773725807736, 0.25100347517704652, 0.80007274940739515, 0.044881302269213164},
  {-0.54486773725807736, 0.25100347517704652, 0.80007274940739515, 0.044881302269213164},
  {0.54486773725807736, -0.25100347517704652, 0.80007274940739515, 0.044881302269213164},
  {0.54486773725807736, 0.25100347517704652, -0.80007274940739515, 0.044881302269213164},
  {-0.54486773725807736, -0.25100347517704652, 0.80007274940739515, 0.044881302269213164},
  {0.54486773725807736, -0.25100347517704652, -0.80007274940739515, 0.044881302269213164},
  {-0.54486773725807736, 0.25100347517704652, -0.80007274940739515, 0.044881302269213164},
  {-0.54486773725807736, -0.25100347517704652, -0.80007274940739515, 0.044881302269213164},
  {0.54486773725807736, 0.80007274940739515, 0.25100347517704652, 0.044881302269213164},
  {-0.54486773725807736, 0.80007274940739515, 0.25100347517704652, 0.044881302269213164},
  {0.54486773725807736, -0.80007274940739515, 0.25100347517704652, 0.044881302269213164},
  {0.54486773725807736, 0.80007274940739515, -0.25100347517704652, 0.044881302269213164},
  {-0.54486773725807736, -0.80007274940739515, 0.25100347517704652, 0.044881302269213164},
  {0.54486773725807736, -0.80007274940739515, -0.25100347517704652, 0.044881302269213164},
  {-0.54486773725807736, 0.80007274940739515, -0.25100347517704652, 0.044881302269213164},
  {-0.54486773725807736, -0.80007274940739515, -0.25100347517704652, 0.044881302269213164},
  {0.25100347517704652, 0.54486773725807736, 0.80007274940739515, 0.044881302269213164},
  {-0.25100347517704652, 0.54486773725807736, 0.80007274940739515, 0.044881302269213164},
  {0.25100347517704652, -0.54486773725807736, 0.80007274940739515, 0.044881302269213164},
  {0.25100347517704652, 0.54486773725807736, -0.80007274940739515, 0.044881302269213164},
  {-0.25100347517704652, -0.54486773725807736, 0.80007274940739515, 0.044881302269213164},
  {0.25100347517704652, -0.54486773725807736, -0.80007274940739515, 0.044881302269213164},
  {-0.25100347517704652, 0.54486773725807736, -0.80007274940739515, 0.044881302269213164},
  {-0.25100347517704652, -0.54486773725807736, -0.80007274940739515, 0.044881302269213164},
  {0.80007274940739515, 0.54486773725807736, 0.25100347517704652, 0.044881302269213164},
  {-0.80007274940739515, 0.54486773725807736, 0.25100347517704652, 0.044881302269213164},
  {0.80007274940739515, -0.54486773725807736, 0.25100347517704652, 0.044881302269213164},
  {0.80007274940739515, 0.54486773725807736, -0.25100347517704652, 0.044881302269213164},
  {-0.80007274940739515, -0.54486773725807736, 0.25100347517704652, 0.044881302269213164},
  {0.80007274940739515, -0.54486773725807736, -0.25100347517704652, 0.044881302269213164},
  {-0.80007274940739515, 0.54486773725807736, -0.25100347517704652, 0.044881302269213164},
  {-0.80007274940739515, -0.54486773725807736, -0.25100347517704652, 0.044881302269213164},
  {0.1233548532583327, 0.41277240831685308, 0.90244252953300041, 0.042629052407721503},
  {-0.1233548532583327, 0.41277240831685308, 0.90244252953300041, 0.042629052407721503},
  {0.1233548532583327, -0.41277240831685308, 0.90244252953300041, 0.042629052407721503},
  {0.1233548532583327, 0.41277240831685308, -0.90244252953300041, 0.042629052407721503},
  {-0.1233548532583327, -0.41277240831685308, 0.90244252953300041, 0.042629052407721503},
  {0.1233548532583327, -0.41277240831685308, -0.90244252953300041, 0.042629052407721503},
  {-0.1233548532583327, 0.41277240831685308, -0.90244252953300041, 0.042629052407721503},
  {-0.1233548532583327, -0.41277240831685308, -0.90244252953300041, 0.042629052407721503},
  {0.41277240831685308, 0.1233548532583327, 0.90244252953300041, 0.042629052407721503},
  {-0.41277240831685308, 0.1233548532583327, 0.90244252953300041, 0.042629052407721503},
  {0.41277240831685308, -0.1233548532583327, 0.90244252953300041, 0.042629052407721503},
  {0.41277240831685308, 0.1233548532583327, -0.90244252953300041, 0.042629052407721503},
  {-0.41277240831685308, -0.1233548532583327, 0.90244252953300041, 0.042629052407721503},
  {0.41277240831685308, -0.1233548532583327, -0.90244252953300041, 0.042629052407721503},
  {-0.41277240831685308, 0.1233548532583327, -0.90244252953300041, 0.042629052407721503},
  {-0.41277240831685308, -0.1233548532583327, -0.90244252953300041, 0.042629052407721503},
  {0.90244252953300041, 0.1233548532583327, 0.41277240831685308, 0.042629052407721503},
  {-0.90244252953300041, 0.1233548532583327, 0.41277240831685308, 0.042629052407721503},
  {0.90244252953300041, -0.1233548532583327, 0.41277240831685308, 0.042629052407721503},
  {0.90244252953300041, 0.1233548532583327, -0.41277240831685308, 0.042629052407721503},
  {-0.90244252953300041, -0.1233548532583327, 0.41277240831685308, 0.042629052407721503},
  {0.90244252953300041, -0.1233548532583327, -0.41277240831685308, 0.042629052407721503},
  {-0.90244252953300041, 0.1233548532583327, -0.41277240831685308, 0.042629052407721503},
  {-0.90244252953300041, -0.1233548532583327, -0.41277240831685308, 0.042629052407721503},
  {0.90244252953300041, 0.41277240831685308, 0.1233548532583327, 0.042629052407721503},
  {-0.90244252953300041, 0.41277240831685308, 0.1233548532583327, 0.042629052407721503},
  {0.90244252953300041, -0.41277240831685308, 0.1233548532583327, 0.042629052407721503},
  {0.90244252953300041, 0.41277240831685308, -0.1233548532583327, 0.042629052407721503},
  {-0.90244252953300041, -0.41277240831685308, 0.1233548532583327, 0.042629052407721503},
  {0.90244252953300041, -0.41277240831685308, -0.1233548532583327, 0.042629052407721503},
  {-0.90244252953300041, 0.41277240831685308, -0.1233548532583327, 0.042629052407721503},
  {-0.90244252953300041, -0.41277240831685308, -0.1233548532583327, 0.042629052407721503},
  {0.1233548532583327, 0.90244252953300041, 0.41277240831685308, 0.042629052407721503},
  {-0.1233548532583327, 0.90244252953300041, 0.41277240831685308, 0.042629052407721503},
  {0.1233548532583327, -0.90244252953300041, 0.41277240831685308, 0.042629052407721503},
  {0.1233548532583327, 0.90244252953300041, -0.41277240831685308, 0.042629052407721503},
  {-0.1233548532583327, -0.90244252953300041, 0.41277240831685308, 0.042629052407721503},
  {0.1233548532583327, -0.90244252953300041, -0.41277240831685308, 0.042629052407721503},
  {-0.1233548532583327, 0.90244252953300041, -0.41277240831685308, 0.042629052407721503},
  {-0.1233548532583327, -0.90244252953300041, -0.41277240831685308, 0.042629052407721503},
  {0.41277240831685308, 0.90244252953300041, 0.1233548532583327, 0.042629052407721503},
  {-0.41277240831685308, 0.90244252953300041, 0.1233548532583327, 0.042629052407721503},
  {0.41277240831685308, -0.90244252953300041, 0.1233548532583327, 0.042629052407721503},
  {0.41277240831685308, 0.90244252953300041, -0.1233548532583327, 0.042629052407721503},
  {-0.41277240831685308, -0.90244252953300041, 0.1233548532583327, 0.042629052407721503},
  {0.41277240831685308, -0.90244252953300041, -0.1233548532583327, 0.042629052407721503},
  {-0.41277240831685308, 0.90244252953300041, -0.1233548532583327, 0.042629052407721503},
  {-0.41277240831685308, -0.90244252953300041, -0.1233548532583327, 0.042629052407721503},
};

const double kRule590[][4] = {
  {1, 0, 0, 0.0038894441293212969},
  {-1, 0, 0, 0.0038894441293212969},
  {0, 1, 0, 0.0038894441293212969},
  {0, -1, 0, 0.0038894441293212969},
  {0, 0, 1, 0.0038894441293212969},
  {0, 0, -1, 0.0038894441293212969},
  {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
  {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
  {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
  {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
  {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.023277689811090987},
  {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
  {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
  {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.023277689811090987},
  {0.70409549382274694, 0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
  {-0.70409549382274694, 0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
  {0.70409549382274694, -0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
  {0.70409549382274694, 0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
  {-0.70409549382274694, -0.70409549382274694, 0.092190407076898254, 0.023521614885652412},
  {-0.70409549382274694, 0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
  {0.70409549382274694, -0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
  {-0.70409549382274694, -0.70409549382274694, -0.092190407076898254, 0.023521614885652412},
  {-0.70409549382274694, 0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
  {0.70409549382274694, -0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
  {0.70409549382274694, 0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
  {-0.70409549382274694, -0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
  {-0.70409549382274694, 0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
  {0.70409549382274694, -0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
  {-0.70409549382274694, -0.092190407076898254, -0.70409549382274694, 0.023521614885652412},
  {0.70409549382274694, 0.092190407076898254, 0.70409549382274694, 0.023521614885652412},
  {0.092190407076898254, 0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
  {-0.092190407076898254, 0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
  {0.092190407076898254, -0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
  {0.092190407076898254, 0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
  {-0.092190407076898254, -0.70409549382274694, 0.70409549382274694, 0.023521614885652412},
  {-0.092190407076898254, 0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
  {0.092190407076898254, -0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
  {-0.092190407076898254, -0.70409549382274694, -0.70409549382274694, 0.023521614885652412},
  {0.68077440664552435, 0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
  {-0.68077440664552435, 0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
  {0.68077440664552435, -0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
  {0.68077440664552435, 0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
  {-0.68077440664552435, -0.68077440664552435, 0.2703560883591648, 0.023358527851253065},
  {-0.68077440664552435, 0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
  {0.68077440664552435, -0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
  {-0.68077440664552435, -0.68077440664552435, -0.2703560883591648, 0.023358527851253065},
  {-0.68077440664552435, 0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
  {0.68077440664552435, -0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
  {0.68077440664552435, 0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
  {-0.68077440664552435, -0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
  {-0.68077440664552435, 0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
  {0.68077440664552435, -0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
  {-0.68077440664552435, -0.2703560883591648, -0.68077440664552435, 0.023358527851253065},
  {0.68077440664552435, 0.2703560883591648, 0.68077440664552435, 0.023358527851253065},
  {0.2703560883591648, 0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
  {-0.2703560883591648, 0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
  {0.2703560883591648, -0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
  {0.2703560883591648, 0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
  {-0.2703560883591648, -0.68077440664552435, 0.68077440664552435, 0.023358527851253065},
  {-0.2703560883591648, 0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
  {0.2703560883591648, -0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
  {-0.2703560883591648, -0.68077440664552435, -0.68077440664552435, 0.023358527851253065},
  {0.63725469392587519, 0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
  {-0.63725469392587519, 0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
  {0.63725469392587519, -0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
  {0.63725469392587519, 0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
  {-0.63725469392587519, -0.63725469392587519, 0.43337386877715439, 0.023273280644847582},
  {-0.63725469392587519, 0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
  {0.63725469392587519, -0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
  {-0.63725469392587519, -0.63725469392587519, -0.43337386877715439, 0.023273280644847582},
  {-0.63725469392587519, 0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
  {0.63725469392587519, -0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
  {0.63725469392587519, 0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
  {-0.63725469392587519, -0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
  {-0.63725469392587519, 0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
  {0.63725469392587519, -0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
  {-0.63725469392587519, -0.43337386877715439, -0.63725469392587519, 0.023273280644847582},
  {0.63725469392587519, 0.43337386877715439, 0.63725469392587519, 0.023273280644847582},
  {0.43337386877715439, 0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
  {-0.43337386877715439, 0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
  {0.43337386877715439, -0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
  {0.43337386877715439, 0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
  {-0.43337386877715439, -0.63725469392587519, 0.63725469392587519, 0.023273280644847582},
  {-0.43337386877715439, 0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
  {0.43337386877715439, -0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
  {-0.43337386877715439, -0.63725469392587519, -0.63725469392587519, 0.023273280644847582},
  {0.50444197078003583, 0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
  {-0.50444197078003583, 0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
  {0.50444197078003583, -0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
  {0.50444197078003583, 0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
  {-0.50444197078003583, -0.50444197078003583, 0.70076857537357296, 0.023206517124447171},
  {-0.50444197078003583, 0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
  {0.50444197078003583, -0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
  {-0.50444197078003583, -0.50444197078003583, -0.70076857537357296, 0.023206517124447171},
  {-0.50444197078003583, 0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
  {0.50444197078003583, -0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
  {0.50444197078003583, 0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
  {-0.50444197078003583, -0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
  {-0.50444197078003583, 0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
  {0.50444197078003583, -0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
  {-0.50444197078003583, -0.70076857537357296, -0.50444197078003583, 0.023206517124447171},
  {0.50444197078003583, 0.70076857537357296, 0.50444197078003583, 0.023206517124447171},
  {0.70076857537357296, 0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
  {-0.70076857537357296, 0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
  {0.70076857537357296, -0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
  {0.70076857537357296, 0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
  {-0.70076857537357296, -0.50444197078003583, 0.50444197078003583, 0.023206517124447171},
  {-0.70076857537357296, 0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
  {0.70076857537357296, -0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
  {-0.70076857537357296, -0.50444197078003583, -0.50444197078003583, 0.023206517124447171},
  {0.42157617840109668, 0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
  {-0.42157617840109668, 0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
  {0.42157617840109668, -0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
  {0.42157617840109668, 0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
  {-0.42157617840109668, -0.42157617840109668, 0.80283687733527376, 0.02285159031614609},
  {-0.42157617840109668, 0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
  {0.42157617840109668, -0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
  {-0.42157617840109668, -0.42157617840109668, -0.80283687733527376, 0.02285159031614609},
  {-0.42157617840109668, 0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
  {0.42157617840109668, -0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
  {0.42157617840109668, 0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
  {-0.42157617840109668, -0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
  {-0.42157617840109668, 0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
  {0.42157617840109668, -0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
  {-0.42157617840109668, -0.80283687733527376, -0.42157617840109668, 0.02285159031614609},
  {0.42157617840109668, 0.80283687733527376, 0.42157617840109668, 0.02285159031614609},
  {0.80283687733527376, 0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
  {-0.80283687733527376, 0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
  {0.80283687733527376, -0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
  {0.80283687733527376, 0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
  {-0.80283687733527376, -0.42157617840109668, 0.42157617840109668, 0.02285159031614609},
  {-0.80283687733527376, 0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
  {0.80283687733527376, -0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
  {-0.80283687733527376, -0.42157617840109668, -0.42157617840109668, 0.02285159031614609},
  {0.3317920736472123, 0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
  {-0.3317920736472123, 0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
  {0.3317920736472123, -0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
  {0.3317920736472123, 0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
  {-0.3317920736472123, -0.3317920736472123, 0.88307872793413256, 0.02198567789717927},
  {-0.3317920736472123, 0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
  {0.3317920736472123, -0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
  {-0.3317920736472123, -0.3317920736472123, -0.88307872793413256, 0.02198567789717927},
  {-0.3317920736472123, 0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
  {0.3317920736472123, -0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
  {0.3317920736472123, 0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
  {-0.3317920736472123, -0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
  {-0.3317920736472123, 0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
  {0.3317920736472123, -0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
  {-0.3317920736472123, -0.88307872793413256, -0.3317920736472123, 0.02198567789717927},
  {0.3317920736472123, 0.88307872793413256, 0.3317920736472123, 0.02198567789717927},
  {0.88307872793413256, 0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
  {-0.88307872793413256, 0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
  {0.88307872793413256, -0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
  {0.88307872793413256, 0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
  {-0.88307872793413256, -0.3317920736472123, 0.3317920736472123, 0.02198567789717927},
  {-0.88307872793413256, 0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
  {0.88307872793413256, -0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
  {-0.88307872793413256, -0.3317920736472123, -0.3317920736472123, 0.02198567789717927},
  {0.2384736701421887, 0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
  {-0.2384736701421887, 0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
  {0.2384736701421887, -0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
  {0.2384736701421887, 0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
  {-0.2384736701421887, -0.2384736701421887, 0.94141415822040253, 0.020322468354886609},
  {-0.2384736701421887, 0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
  {0.2384736701421887, -0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
  {-0.2384736701421887, -0.2384736701421887, -0.94141415822040253, 0.020322468354886609},
  {-0.2384736701421887, 0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
  {0.2384736701421887, -0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
  {0.2384736701421887, 0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
  {-0.2384736701421887, -0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
  {-0.2384736701421887, 0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
  {0.2384736701421887, -0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
  {-0.2384736701421887, -0.94141415822040253, -0.2384736701421887, 0.020322468354886609},
  {0.2384736701421887, 0.94141415822040253, 0.2384736701421887, 0.020322468354886609},
  {0.94141415822040253, 0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
  {-0.94141415822040253, 0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
  {0.94141415822040253, -0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
  {0.94141415822040253, 0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
  {-0.94141415822040253, -0.2384736701421887, 0.2384736701421887, 0.020322468354886609},
  {-0.94141415822040253, 0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
  {0.94141415822040253, -0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
  {-0.94141415822040253, -0.2384736701421887, -0.2384736701421887, 0.020322468354886609},
  {0.14590364491577629, 0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
  {-0.14590364491577629, 0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
  {0.14590364491577629, -0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
  {0.14590364491577629, 0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
  {-0.14590364491577629, -0.14590364491577629, 0.97848058376269387, 0.017401121296649277},
  {-0.14590364491577629, 0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
  {0.14590364491577629, -0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
  {-0.14590364491577629, -0.14590364491577629, -0.97848058376269387, 0.017401121296649277},
  {-0.14590364491577629, 0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
  {0.14590364491577629, -0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
  {0.14590364491577629, 0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
  {-0.14590364491577629, -0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
  {-0.14590364491577629, 0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
  {0.14590364491577629, -0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
  {-0.14590364491577629, -0.97848058376269387, -0.14590364491577629, 0.017401121296649277},
  {0.14590364491577629, 0.97848058376269387, 0.14590364491577629, 0.017401121296649277},
  {0.97848058376269387, 0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
  {-0.97848058376269387, 0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
  {0.97848058376269387, -0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
  {0.97848058376269387, 0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
  {-0.97848058376269387, -0.14590364491577629, 0.14590364491577629, 0.017401121296649277},
  {-0.97848058376269387, 0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
  {0.97848058376269387, -0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
  {-0.97848058376269387, -0.14590364491577629, -0.14590364491577629, 0.017401121296649277},
  {0.06095034115507196, 0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
  {-0.06095034115507196, 0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
  {0.06095034115507196, -0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
  {0.06095034115507196, 0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
  {-0.06095034115507196, -0.06095034115507196, 0.99627812975401642, 0.012270220422136898},
  {-0.06095034115507196, 0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
  {0.06095034115507196, -0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
  {-0.06095034115507196, -0.06095034115507196, -0.99627812975401642, 0.012270220422136898},
  {-0.06095034115507196, 0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
  {0.06095034115507196, -0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
  {0.06095034115507196, 0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
  {-0.06095034115507196, -0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
  {-0.06095034115507196, 0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
  {0.06095034115507196, -0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
  {-0.06095034115507196, -0.99627812975401642, -0.06095034115507196, 0.012270220422136898},
  {0.06095034115507196, 0.99627812975401642, 0.06095034115507196, 0.012270220422136898},
  {0.99627812975401642, 0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
  {-0.99627812975401642, 0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
  {0.99627812975401642, -0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
  {0.99627812975401642, 0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
  {-0.99627812975401642, -0.06095034115507196, 0.06095034115507196, 0.012270220422136898},
  {-0.99627812975401642, 0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
  {0.99627812975401642, -0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
  {-0.99627812975401642, -0.06095034115507196, -0.06095034115507196, 0.012270220422136898},
  {0.61168434420098761, 0.79110192962690196, 0, 0.023337775889269885},
  {-0.61168434420098761, 0.79110192962690196, 0, 0.023337775889269885},
  {0.61168434420098761, -0.79110192962690196, 0, 0.023337775889269885},
  {-0.61168434420098761, -0.79110192962690196, 0, 0.023337775889269885},
  {0.79110192962690196, 0.61168434420098761, 0, 0.023337775889269885},
  {-0.79110192962690196, 0.61168434420098761, 0, 0.023337775889269885},
  {0.79110192962690196, -0.61168434420098761, 0, 0.023337775889269885},
  {-0.79110192962690196, -0.61168434420098761, 0, 0.023337775889269885},
  {0.61168434420098761, 0, 0.79110192962690196, 0.023337775889269885},
  {-0.61168434420098761, 0, 0.79110192962690196, 0.023337775889269885},
  {0.61168434420098761, 0, -0.79110192962690196, 0.023337775889269885},
  {-0.61168434420098761, 0, -0.79110192962690196, 0.023337775889269885},
  {0.79110192962690196, 0, 0.61168434420098761, 0.023337775889269885},
  {-0.79110192962690196, 0, 0.61168434420098761, 0.023337775889269885},
  {0.79110192962690196, 0, -0.61168434420098761, 0.023337775889269885},
  {-0.79110192962690196, 0, -0.61168434420098761, 0.023337775889269885},
  {0, 0.61168434420098761, 0.79110192962690196, 0.023337775889269885},
  {0, -0.61168434420098761, 0.79110192962690196, 0.023337775889269885},
  {0, 0.61168434420098761, -0.79110192962690196, 0.023337775889269885},
  {0, -0.61168434420098761, -0.79110192962690196, 0.023337775889269885},
  {0, 0.79110192962690196, 0.61168434420098761, 0.023337775889269885},
  {0, -0.79110192962690196, 0.61168434420098761, 0.023337775889269885},
  {0, 0.79110192962690196, -0.61168434420098761, 0.023337775889269885},
  {0, -0.79110192962690196, -0.61168434420098761, 0.023337775889269885},
  {0.39647553481998582, 0.91804528771145399, 0, 0.021427597073266094},
  {-0.39647553481998582, 0.91804528771145399, 0, 0.021427597073266094},
  {0.39647553481998582, -0.91804528771145399, 0, 0.021427597073266094},
  {-0.39647553481998582, -0.91804528771145399, 0, 0.021427597073266094},
  {0.91804528771145399, 0.39647553481998582, 0, 0.021427597073266094},
  {-0.91804528771145399, 0.39647553481998582, 0, 0.021427597073266094},
  {0.91804528771145399, -0.39647553481998582, 0, 0.021427597073266094},
  {-0.91804528771145399, -0.39647553481998582, 0, 0.021427597073266094},
  {0.39647553481998582, 0, 0.91804528771145399, 0.021427597073266094},
  {-0.39647553481998582, 0, 0.91804528771145399, 0.021427597073266094},
  {0.39647553481998582, 0, -0.91804528771145399, 0.021427597073266094},
  {-0.39647553481998582, 0, -0.91804528771145399, 0.021427597073266094},
  {0.91804528771145399, 0, 0.39647553481998582, 0.021427597073266094},
  {-0.91804528771145399, 0, 0.39647553481998582, 0.021427597073266094},
  {0.91804528771145399, 0, -0.39647553481998582, 0.021427597073266094},
  {-0.91804528771145399, 0, -0.39647553481998582, 0.021427597073266094},
  {0, 0.39647553481998582, 0.91804528771145399, 0.021427597073266094},
  {0, -0.39647553481998582, 0.91804528771145399, 0.021427597073266094},
  {0, 0.39647553481998582, -0.91804528771145399, 0.021427597073266094},
  {0, -0.39647553481998582, -0.91804528771145399, 0.021427597073266094},
  {0, 0.91804528771145399, 0.39647553481998582, 0.021427597073266094},
  {0, -0.91804528771145399, 0.39647553481998582, 0.021427597073266094},
  {0, 0.91804528771145399, -0.39647553481998582, 0.021427597073266094},
  {0, -0.91804528771145399, -0.39647553481998582, 0.021427597073266094},
  {0.17247820099077241, 0.98501333502800192, 0, 0.016340324222732412},
  {-0.17247820099077241, 0.98501333502800192, 0, 0.016340324222732412},
  {0.17247820099077241, -0.98501333502800192, 0, 0.016340324222732412},
  {-0.17247820099077241, -0.98501333502800192, 0, 0.016340324222732412},
  {0.98501333502800192, 0.17247820099077241, 0, 0.016340324222732412},
  {-0.98501333502800192, 0.17247820099077241, 0, 0.016340324222732412},
  {0.98501333502800192, -0.17247820099077241, 0, 0.016340324222732412},
  {-0.98501333502800192, -0.17247820099077241, 0, 0.016340324222732412},
  {0.17247820099077241, 0, 0.98501333502800192, 0.016340324222732412},
  {-0.17247820099077241, 0, 0.98501333502800192, 0.016340324222732412},
  {0.17247820099077241, 0, -0.98501333502800192, 0.016340324222732412},
  {-0.17247820099077241, 0, -0.98501333502800192, 0.016340324222732412},
  {0.98501333502800192, 0, 0.17247820099077241, 0.016340324222732412},
  {-0.98501333502800192, 0, 0.17247820099077241, 0.016340324222732412},
  {0.98501333502800192, 0, -0.17247820099077241, 0.016340324222732412},
  {-0.98501333502800192, 0, -0.17247820099077241, 0.016340324222732412},
  {0, 0.17247820099077241, 0.98501333502800192, 0.016340324222732412},
  {0, -0.17247820099077241, 0.98501333502800192, 0.016340324222732412},
  {0, 0.17247820099077241, -0.98501333502800192, 0.016340324222732412},
  {0, -0.17247820099077241, -0.98501333502800192, 0.016340324222732412},
  {0, 0.98501333502800192, 0.17247820099077241, 0.016340324222732412},
  {0, -0.98501333502800192, 0.17247820099077241, 0.016340324222732412},
  {0, 0.98501333502800192, -0.17247820099077241, 0.016340324222732412},
  {0, -0.98501333502800192, -0.17247820099077241, 0.016340324222732412},
  {0.56102638086220602, 0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
  {-0.56102638086220602, 0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
  {0.56102638086220602, -0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
  {0.56102638086220602, 0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
  {-0.56102638086220602, -0.35182809277335192, 0.74931061190411585, 0.02315814309130472},
  {0.56102638086220602, -0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
  {-0.56102638086220602, 0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
  {-0.56102638086220602, -0.35182809277335192, -0.74931061190411585, 0.02315814309130472},
  {0.35182809277335192, 0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
  {-0.35182809277335192, 0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
  {0.35182809277335192, -0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
  {0.35182809277335192, 0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
  {-0.35182809277335192, -0.56102638086220602, 0.74931061190411585, 0.02315814309130472},
  {0.35182809277335192, -0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
  {-0.35182809277335192, 0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
  {-0.35182809277335192, -0.56102638086220602, -0.74931061190411585, 0.02315814309130472},
  {0.74931061190411585, 0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
  {-0.74931061190411585, 0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
  {0.74931061190411585, -0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
  {0.74931061190411585, 0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
  {-0.74931061190411585, -0.56102638086220602, 0.35182809277335192, 0.02315814309130472},
  {0.74931061190411585, -0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
  {-0.74931061190411585, 0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
  {-0.74931061190411585, -0.56102638086220602, -0.35182809277335192, 0.02315814309130472},
  {0.74931061190411585, 0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
  {-0.74931061190411585, 0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
  {0.74931061190411585, -0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
  {0.74931061190411585, 0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
  {-0.74931061190411585, -0.35182809277335192, 0.56102638086220602, 0.02315814309130472},
  {0.74931061190411585, -0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
  {-0.74931061190411585, 0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
  {-0.74931061190411585, -0.35182809277335192, -0.56102638086220602, 0.02315814309130472},
  {0.56102638086220602, 0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
  {-0.56102638086220602, 0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
  {0.56102638086220602, -0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
  {0.56102638086220602, 0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
  {-0.56102638086220602, -0.74931061190411585, 0.35182809277335192, 0.02315814309130472},
  {0.56102638086220602, -0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
  {-0.56102638086220602, 0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
  {-0.56102638086220602, -0.74931061190411585, -0.35182809277335192, 0.02315814309130472},
  {0.35182809277335192, 0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
  {-0.35182809277335192, 0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
  {0.35182809277335192, -0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
  {0.35182809277335192, 0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
  {-0.35182809277335192, -0.74931061190411585, 0.56102638086220602, 0.02315814309130472},
  {0.35182809277335192, -0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
  {-0.35182809277335192, 0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
  {-0.35182809277335192, -0.74931061190411585, -0.56102638086220602, 0.02315814309130472},
  {0.47423928425519801, 0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
  {-0.47423928425519801, 0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
  {0.47423928425519801, -0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
  {0.47423928425519801, 0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
  {-0.47423928425519801, -0.26347166559379498, 0.84004748835905041, 0.02265288026067282},
  {0.47423928425519801, -0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
  {-0.47423928425519801, 0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
  {-0.47423928425519801, -0.26347166559379498, -0.84004748835905041, 0.02265288026067282},
  {0.26347166559379498, 0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
  {-0.26347166559379498, 0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
  {0.26347166559379498, -0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
  {0.26347166559379498, 0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
  {-0.26347166559379498, -0.47423928425519801, 0.84004748835905041, 0.02265288026067282},
  {0.26347166559379498, -0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
  {-0.26347166559379498, 0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
  {-0.26347166559379498, -0.47423928425519801, -0.84004748835905041, 0.02265288026067282},
  {0.84004748835905041, 0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
  {-0.84004748835905041, 0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
  {0.84004748835905041, -0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
  {0.84004748835905041, 0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
  {-0.84004748835905041, -0.47423928425519801, 0.26347166559379498, 0.02265288026067282},
  {0.84004748835905041, -0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
  {-0.84004748835905041, 0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
  {-0.84004748835905041, -0.47423928425519801, -0.26347166559379498, 0.02265288026067282},
  {0.84004748835905041, 0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
  {-0.84004748835905041, 0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
  {0.84004748835905041, -0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
  {0.84004748835905041, 0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
  {-0.84004748835905041, -0.26347166559379498, 0.47423928425519801, 0.02265288026067282},
  {0.84004748835905041, -0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
  {-0.84004748835905041, 0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
  {-0.84004748835905041, -0.26347166559379498, -0.47423928425519801, 0.02265288026067282},
  {0.47423928425519801, 0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
  {-0.47423928425519801, 0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
  {0.47423928425519801, -0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
  {0.47423928425519801, 0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
  {-0.47423928425519801, -0.84004748835905041, 0.26347166559379498, 0.02265288026067282},
  {0.47423928425519801, -0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
  {-0.47423928425519801, 0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
  {-0.47423928425519801, -0.84004748835905041, -0.26347166559379498, 0.02265288026067282},
  {0.26347166559379498, 0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
  {-0.26347166559379498, 0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
  {0.26347166559379498, -0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
  {0.26347166559379498, 0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
  {-0.26347166559379498, -0.84004748835905041, 0.47423928425519801, 0.02265288026067282},
  {0.26347166559379498, -0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
  {-0.26347166559379498, 0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
  {-0.26347166559379498, -0.84004748835905041, -0.47423928425519801, 0.02265288026067282},
  {0.59841264978853803, 0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
  {-0.59841264978853803, 0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
  {0.59841264978853803, -0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
  {0.59841264978853803, 0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
  {-0.59841264978853803, -0.18166408403602091, 0.78032074247992034, 0.023245656396302768},
  {0.59841264978853803, -0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
  {-0.59841264978853803, 0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
  {-0.59841264978853803, -0.18166408403602091, -0.78032074247992034, 0.023245656396302768},
  {0.18166408403602091, 0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
  {-0.18166408403602091, 0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
  {0.18166408403602091, -0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
  {0.18166408403602091, 0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
  {-0.18166408403602091, -0.59841264978853803, 0.78032074247992034, 0.023245656396302768},
  {0.18166408403602091, -0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
  {-0.18166408403602091, 0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
  {-0.18166408403602091, -0.59841264978853803, -0.78032074247992034, 0.023245656396302768},
  {0.78032074247992034, 0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
  {-0.78032074247992034, 0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
  {0.78032074247992034, -0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
  {0.78032074247992034, 0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
  {-0.78032074247992034, -0.59841264978853803, 0.18166408403602091, 0.023245656396302768},
  {0.78032074247992034, -0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
  {-0.78032074247992034, 0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
  {-0.78032074247992034, -0.59841264978853803, -0.18166408403602091, 0.023245656396302768},
  {0.78032074247992034, 0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
  {-0.78032074247992034, 0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
  {0.78032074247992034, -0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
  {0.78032074247992034, 0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
  {-0.78032074247992034, -0.18166408403602091, 0.59841264978853803, 0.023245656396302768},
  {0.78032074247992034, -0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
  {-0.78032074247992034, 0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
  {-0.78032074247992034, -0.18166408403602091, -0.59841264978853803, 0.023245656396302768},
  {0.59841264978853803, 0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
  {-0.59841264978853803, 0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
  {0.59841264978853803, -0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
  {0.59841264978853803, 0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
  {-0.59841264978853803, -0.78032074247992034, 0.18166408403602091, 0.023245656396302768},
  {0.59841264978853803, -0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
  {-0.59841264978853803, 0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
  {-0.59841264978853803, -0.78032074247992034, -0.18166408403602091, 0.023245656396302768},
  {0.18166408403602091, 0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
  {-0.18166408403602091, 0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
  {0.18166408403602091, -0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
  {0.18166408403602091, 0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
  {-0.18166408403602091, -0.78032074247992034, 0.59841264978853803, 0.023245656396302768},
  {0.18166408403602091, -0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
  {-0.18166408403602091, 0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
  {-0.18166408403602091, -0.78032074247992034, -0.59841264978853803, 0.023245656396302768},
  {0.37910354076955632, 0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
  {-0.37910354076955632, 0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
  {0.37910354076955632, -0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
  {0.37910354076955632, 0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
  {-0.37910354076955632, -0.17207952256568779, 0.9092134750923736, 0.021537559233923489},
  {0.37910354076955632, -0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
  {-0.37910354076955632, 0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
  {-0.37910354076955632, -0.17207952256568779, -0.9092134750923736, 0.021537559233923489},
  {0.17207952256568779, 0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
  {-0.17207952256568779, 0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
  {0.17207952256568779, -0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
  {0.17207952256568779, 0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
  {-0.17207952256568779, -0.37910354076955632, 0.9092134750923736, 0.021537559233923489},
  {0.17207952256568779, -0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
  {-0.17207952256568779, 0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
  {-0.17207952256568779, -0.37910354076955632, -0.9092134750923736, 0.021537559233923489},
  {0.9092134750923736, 0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
  {-0.9092134750923736, 0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
  {0.9092134750923736, -0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
  {0.9092134750923736, 0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
  {-0.9092134750923736, -0.37910354076955632, 0.17207952256568779, 0.021537559233923489},
  {0.9092134750923736, -0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
  {-0.9092134750923736, 0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
  {-0.9092134750923736, -0.37910354076955632, -0.17207952256568779, 0.021537559233923489},
  {0.9092134750923736, 0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
  {-0.9092134750923736, 0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
  {0.9092134750923736, -0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
  {0.9092134750923736, 0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
  {-0.9092134750923736, -0.17207952256568779, 0.37910354076955632, 0.021537559233923489},
  {0.9092134750923736, -0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
  {-0.9092134750923736, 0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
  {-0.9092134750923736, -0.17207952256568779, -0.37910354076955632, 0.021537559233923489},
  {0.37910354076955632, 0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
  {-0.37910354076955632, 0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
  {0.37910354076955632, -0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
  {0.37910354076955632, 0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
  {-0.37910354076955632, -0.9092134750923736, 0.17207952256568779, 0.021537559233923489},
  {0.37910354076955632, -0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
  {-0.37910354076955632, 0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
  {-0.37910354076955632, -0.9092134750923736, -0.17207952256568779, 0.021537559233923489},
  {0.17207952256568779, 0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
  {-0.17207952256568779, 0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
  {0.17207952256568779, -0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
  {0.17207952256568779, 0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
  {-0.17207952256568779, -0.9092134750923736, 0.37910354076955632, 0.021537559233923489},
  {0.17207952256568779, -0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
  {-0.17207952256568779, 0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
  {-0.17207952256568779, -0.9092134750923736, -0.37910354076955632, 0.021537559233923489},
  {0.27786731905862438, 0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
  {-0.27786731905862438, 0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
  {0.27786731905862438, -0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
  {0.27786731905862438, 0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
  {-0.27786731905862438, -0.082130215819325114, 0.95710207431007255, 0.019543390524777288},
  {0.27786731905862438, -0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
  {-0.27786731905862438, 0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
  {-0.27786731905862438, -0.082130215819325114, -0.95710207431007255, 0.019543390524777288},
  {0.082130215819325114, 0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
  {-0.082130215819325114, 0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
  {0.082130215819325114, -0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
  {0.082130215819325114, 0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
  {-0.082130215819325114, -0.27786731905862438, 0.95710207431007255, 0.019543390524777288},
  {0.082130215819325114, -0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
  {-0.082130215819325114, 0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
  {-0.082130215819325114, -0.27786731905862438, -0.95710207431007255, 0.019543390524777288},
  {0.95710207431007255, 0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
  {-0.95710207431007255, 0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
  {0.95710207431007255, -0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
  {0.95710207431007255, 0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
  {-0.95710207431007255, -0.27786731905862438, 0.082130215819325114, 0.019543390524777288},
  {0.95710207431007255, -0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
  {-0.95710207431007255, 0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
  {-0.95710207431007255, -0.27786731905862438, -0.082130215819325114, 0.019543390524777288},
  {0.95710207431007255, 0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
  {-0.95710207431007255, 0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
  {0.95710207431007255, -0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
  {0.95710207431007255, 0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
  {-0.95710207431007255, -0.082130215819325114, 0.27786731905862438, 0.019543390524777288},
  {0.95710207431007255, -0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
  {-0.95710207431007255, 0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
  {-0.95710207431007255, -0.082130215819325114, -0.27786731905862438, 0.019543390524777288},
  {0.27786731905862438, 0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
  {-0.27786731905862438, 0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
  {0.27786731905862438, -0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
  {0.27786731905862438, 0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
  {-0.27786731905862438, -0.95710207431007255, 0.082130215819325114, 0.019543390524777288},
  {0.27786731905862438, -0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
  {-0.27786731905862438, 0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
  {-0.27786731905862438, -0.95710207431007255, -0.082130215819325114, 0.019543390524777288},
  {0.082130215819325114, 0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
  {-0.082130215819325114, 0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
  {0.082130215819325114, -0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
  {0.082130215819325114, 0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
  {-0.082130215819325114, -0.95710207431007255, 0.27786731905862438, 0.019543390524777288},
  {0.082130215819325114, -0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
  {-0.082130215819325114, 0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
  {-0.082130215819325114, -0.95710207431007255, -0.27786731905862438, 0.019543390524777288},
  {0.50335642710751172, 0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
  {-0.50335642710751172, 0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
  {0.50335642710751172, -0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
  {0.50335642710751172, 0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
  {-0.50335642710751172, -0.089992058420748755, 0.85937985589072119, 0.022647604818254626},
  {0.50335642710751172, -0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
  {-0.50335642710751172, 0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
  {-0.50335642710751172, -0.089992058420748755, -0.85937985589072119, 0.022647604818254626},
  {0.089992058420748755, 0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
  {-0.089992058420748755, 0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
  {0.089992058420748755, -0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
  {0.089992058420748755, 0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
  {-0.089992058420748755, -0.50335642710751172, 0.85937985589072119, 0.022647604818254626},
  {0.089992058420748755, -0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
  {-0.089992058420748755, 0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
  {-0.089992058420748755, -0.50335642710751172, -0.85937985589072119, 0.022647604818254626},
  {0.85937985589072119, 0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
  {-0.85937985589072119, 0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
  {0.85937985589072119, -0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
  {0.85937985589072119, 0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
  {-0.85937985589072119, -0.50335642710751172, 0.089992058420748755, 0.022647604818254626},
  {0.85937985589072119, -0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
  {-0.85937985589072119, 0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
  {-0.85937985589072119, -0.50335642710751172, -0.089992058420748755, 0.022647604818254626},
  {0.85937985589072119, 0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
  {-0.85937985589072119, 0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
  {0.85937985589072119, -0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
  {0.85937985589072119, 0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
  {-0.85937985589072119, -0.089992058420748755, 0.50335642710751172, 0.022647604818254626},
  {0.85937985589072119, -0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
  {-0.85937985589072119, 0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
  {-0.85937985589072119, -0.089992058420748755, -0.50335642710751172, 0.022647604818254626},
  {0.50335642710751172, 0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
  {-0.50335642710751172, 0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
  {0.50335642710751172, -0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
  {0.50335642710751172, 0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
  {-0.50335642710751172, -0.85937985589072119, 0.089992058420748755, 0.022647604818254626},
  {0.50335642710751172, -0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
  {-0.50335642710751172, 0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
  {-0.50335642710751172, -0.85937985589072119, -0.089992058420748755, 0.022647604818254626},
  {0.089992058420748755, 0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
  {-0.089992058420748755, 0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
  {0.089992058420748755, -0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
  {0.089992058420748755, 0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
  {-0.089992058420748755, -0.85937985589072119, 0.50335642710751172, 0.022647604818254626},
  {0.089992058420748755, -0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
  {-0.089992058420748755, 0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
  {-0.089992058420748755, -0.85937985589072119, -0.50335642710751172, 0.022647604818254626},
};

const double kRule1202[][4] = {
  {1, 0, 0, 0.0013888217504239762},
  {-1, 0, 0, 0.0013888217504239762},
  {0, 1, 0, 0.0013888217504239762},
  {0, -1, 0, 0.0013888217504239762},
  {0, 0, 1, 0.0013888217504239762},
  {0, 0, -1, 0.0013888217504239762},
  {0, 0.70710678118654757, 0.70710678118654757, 0.01156763661782805},
  {0, -0.70710678118654757, 0.70710678118654757, 0.01156763661782805},
  {0, 0.70710678118654757, -0.70710678118654757, 0.01156763661782805},
  {0, -0.70710678118654757, -0.70710678118654757, 0.01156763661782805},
  {0.70710678118654757, 0, 0.70710678118654757, 0.01156763661782805},
  {0.70710678118654757, 0, -0.70710678118654757, 0.01156763661782805},
  {-0.70710678118654757, 0, 0.70710678118654757, 0.01156763661782805},
  {-0.70710678118654757, 0, -0.70710678118654757, 0.01156763661782805},
  {0.70710678118654757, 0.70710678118654757, 0, 0.01156763661782805},
  {-0.70710678118654757, 0.70710678118654757, 0, 0.01156763661782805},
  {0.70710678118654757, -0.70710678118654757, 0, 0.01156763661782805},
  {-0.70710678118654757, -0.70710678118654757, 0, 0.01156763661782805},
  {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.011477067075661127},
  {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.011477067075661127},
  {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.011477067075661127},
  {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.011477067075661127},
  {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.011477067075661127},
  {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.011477067075661127},
  {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.011477067075661127},
  {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.011477067075661127},
  {0.037126364496570891, 0.037126364496570891, 0.99862068179991925, 0.0046375209293839726},
  {-0.037126364496570891, 0.037126364496570891, 0.99862068179991925, 0.0046375209293839726},
  {0.037126364496570891, -0.037126364496570891, 0.99862068179991925, 0.0046375209293839726},
  {0.037126364496570891, 0.037126364496570891, -0.99862068179991925, 0.0046375209293839726},
  {-0.037126364496570891, -0.037126364496570891, 0.99862068179991925, 0.0046375209293839726},
  {-0.037126364496570891, 0.037126364496570891, -0.99862068179991925, 0.0046375209293839726},
  {0.037126364496570891, -0.037126364496570891, -0.99862068179991925, 0.0046375209293839726},
  {-0.037126364496570891, -0.037126364496570891, -0.99862068179991925, 0.0046375209293839726},
  {-0.037126364496570891, 0.99862068179991925, 0.037126364496570891, 0.0046375209293839726},
  {0.037126364496570891, -0.99862068179991925, 0.037126364496570891, 0.0046375209293839726},
  {0.037126364496570891, 0.99862068179991925, -0.037126364496570891, 0.0046375209293839726},
  {-0.037126364496570891, -0.99862068179991925, 0.037126364496570891, 0.0046375209293839726},
  {-0.037126364496570891, 0.99862068179991925, -0.037126364496570891, 0.0046375209293839726},
  {0.037126364496570891, -0.99862068179991925, -0.037126364496570891, 0.0046375209293839726},
  {-0.037126364496570891, -0.99862068179991925, -0.037126364496570891, 0.0046375209293839726},
  {0.037126364496570891, 0.99862068179991925, 0.037126364496570891, 0.0046375209293839726},
  {0.99862068179991925, 0.037126364496570891, 0.037126364496570891, 0.0046375209293839726},
  {-0.99862068179991925, 0.037126364496570891, 0.037126364496570891, 0.0046375209293839726},
  {0.99862068179991925, -0.037126364496570891, 0.037126364496570891, 0.0046375209293839726},
  {0.99862068179991925, 0.037126364496570891, -0.037126364496570891, 0.0046375209293839726},
  {-0.99862068179991925, -0.037126364496570891, 0.037126364496570891, 0.0046375209293839726},
  {-0.99862068179991925, 0.037126364496570891, -0.037126364496570891, 0.0046375209293839726},
  {0.99862068179991925, -0.037126364496570891, -0.037126364496570891, 0.0046375209293839726},
  {-0.99862068179991925, -0.037126364496570891, -0.037126364496570891, 0.0046375209293839726},
  {0.091400604122622228, 0.091400604122622228, 0.99161073972201386, 0.0070421826929308023},
  {-0.091400604122622228, 0.091400604122622228, 0.99161073972201386, 0.0070421826929308023},
  {0.091400604122622228, -0.091400604122622228, 0.99161073972201386, 0.0070421826929308023},
  {0.091400604122622228, 0.091400604122622228, -0.99161073972201386, 0.0070421826929308023},
  {-0.091400604122622228, -0.091400604122622228, 0.99161073972201386, 0.0070421826929308023},
  {-0.091400604122622228, 0.091400604122622228, -0.99161073972201386, 0.0070421826929308023},
  {0.091400604122622228, -0.091400604122622228, -0.99161073972201386, 0.0070421826929308023},
  {-0.091400604122622228, -0.091400604122622228, -0.99161073972201386, 0.0070421826929308023},
  {-0.091400604122622228, 0.99161073972201386, 0.091400604122622228, 0.0070421826929308023},
  {0.091400604122622228, -0.99161073972201386, 0.091400604122622228, 0.0070421826929308023},
  {0.091400604122622228, 0.99161073972201386, -0.091400604122622228, 0.0070421826929308023},
  {-0.091400604122622228, -0.99161073972201386, 0.091400604122622228, 0.0070421826929308023},
  {-0.091400604122622228, 0.99161073972201386, -0.091400604122622228, 0.0070421826929308023},
  {0.091400604122622228, -0.99161073972201386, -0.091400604122622228, 0.0070421826929308023},
  {-0.091400604122622228, -0.99161073972201386, -0.091400604122622228, 0.0070421826929308023},
  {0.091400604122622228, 0.99161073972201386, 0.091400604122622228, 0.0070421826929308023},
  {0.99161073972201386, 0.091400604122622228, 0.091400604122622228, 0.0070421826929308023},
  {-0.99161073972201386, 0.091400604122622228, 0.091400604122622228, 0.0070421826929308023},
  {0.99161073972201386, -0.091400604122622228, 0.091400604122622228, 0.0070421826929308023},
  {0.99161073972201386, 0.091400604122622228, -0.091400604122622228, 0.0070421826929308023},
  {-0.99161073972201386, -0.091400604122622228, 0.091400604122622228, 0.0070421826929308023},
  {-0.99161073972201386, 0.091400604122622228, -0.091400604122622228, 0.0070421826929308023},
  {0.99161073972201386, -0.091400604122622228, -0.091400604122622228, 0.0070421826929308023},
  {-0.99161073972201386, -0.091400604122622228, -0.091400604122622228, 0.0070421826929308023},
  {0.15310778524699059, 0.15310778524699059, 0.97627660639468505, 0.008627187438744667},
  {-0.15310778524699059, 0.15310778524699059, 0.97627660639468505, 0.008627187438744667},
  {0.15310778524699059, -0.15310778524699059, 0.97627660639468505, 0.008627187438744667},
  {0.15310778524699059, 0.15310778524699059, -0.97627660639468505, 0.008627187438744667},
  {-0.15310778524699059, -0.15310778524699059, 0.97627660639468505, 0.008627187438744667},
  {-0.15310778524699059, 0.15310778524699059, -0.97627660639468505, 0.008627187438744667},
  {0.15310778524699059, -0.15310778524699059, -0.97627660639468505, 0.008627187438744667},
  {-0.15310778524699059, -0.15310778524699059, -0.97627660639468505, 0.008627187438744667},
  {-0.15310778524699059, 0.97627660639468505, 0.15310778524699059, 0.008627187438744667},
  {0.15310778524699059, -0.97627660639468505, 0.15310778524699059, 0.008627187438744667},
  {0.15310778524699059, 0.97627660639468505, -0.15310778524699059, 0.008627187438744667},
  {-0.15310778524699059, -0.97627660639468505, 0.15310778524699059, 0.008627187438744667},
  {-0.15310778524699059, 0.97627660639468505, -0.15310778524699059, 0.008627187438744667},
  {0.15310778524699059, -0.97627660639468505, -0.15310778524699059, 0.008627187438744667},
  {-0.15310778524699059, -0.97627660639468505, -0.15310778524699059, 0.008627187438744667},
  {0.15310778524699059, 0.97627660639468505, 0.15310778524699059, 0.008627187438744667},
  {0.97627660639468505, 0.15310778524699059, 0.15310778524699059, 0.008627187438744667},
  {-0.97627660639468505, 0.15310778524699059, 0.15310778524699059, 0.008627187438744667},
  {0.97627660639468505, -0.15310778524699059, 0.15310778524699059, 0.008627187438744667},
  {0.97627660639468505, 0.15310778524699059, -0.15310778524699059, 0.008627187438744667},
  {-0.97627660639468505, -0.15310778524699059, 0.15310778524699059, 0.008627187438744667},
  {-0.97627660639468505, 0.15310778524699059, -0.15310778524699059, 0.008627187438744667},
  {0.97627660639468505, -0.15310778524699059, -0.15310778524699059, 0.008627187438744667},
  {-0.97627660639468505, -0.15310778524699059, -0.15310778524699059, 0.008627187438744667},
  {0.2180928891660612, 0.2180928891660612, 0.95124706748057852, 0.0097016635502020724},
  {-0.2180928891660612, 0.2180928891660612, 0.95124706748057852, 0.0097016635502020724},
  {0.2180928891660612, -0.2180928891660612, 0.95124706748057852, 0.0097016635502020724},
  {0.2180928891660612, 0.2180928891660612, -0.95124706748057852, 0.0097016635502020724},
  {-0.2180928891660612, -0.2180928891660612, 0.95124706748057852, 0.0097016635502020724},
  {-0.2180928891660612, 0.2180928891660612, -0.95124706748057852, 0.0097016635502020724},
  {0.2180928891660612, -0.2180928891660612, -0.95124706748057852, 0.0097016635502020724},
  {-0.2180928891660612, -0.2180928891660612, -0.95124706748057852, 0.0097016635502020724},
  {-0.2180928891660612, 0.95124706748057852, 0.2180928891660612, 0.0097016635502020724},
  {0.2180928891660612, -0.95124706748057852, 0.2180928891660612, 0.0097016635502020724},
  {0.2180928891660612, 0.95124706748057852, -0.2180928891660612, 0.0097016635502020724},
  {-0.2180928891660612, -0.95124706748057852, 0.2180928891660612, 0.0097016635502020724},
  {-0.2180928891660612, 0.95124706748057852, -0.2180928891660612, 0.0097016635502020724},
  {0.2180928891660612, -0.95124706748057852, -0.2180928891660612, 0.0097016635502020724},
  {-0.2180928891660612, -0.95124706748057852, -0.2180928891660612, 0.0097016635502020724},
  {0.2180928891660612, 0.95124706748057852, 0.2180928891660612, 0.0097016635502020724},
  {0.95124706748057852, 0.2180928891660612, 0.2180928891660612, 0.0097016635502020724},
  {-0.95124706748057852, 0.2180928891660612, 0.2180928891660612, 0.0097016635502020724},
  {0.95124706748057852, -0.2180928891660612, 0.2180928891660612, 0.0097016635502020724},
  {0.95124706748057852, 0.2180928891660612, -0.2180928891660612, 0.0097016635502020724},
  {-0.95124706748057852, -0.2180928891660612, 0.2180928891660612, 0.0097016635502020724},
  {-0.95124706748057852, 0.2180928891660612, -0.2180928891660612, 0.0097016635502020724},
  {0.95124706748057852, -0.2180928891660612, -0.2180928891660612, 0.0097016635502020724},
  {-0.95124706748057852, -0.2180928891660612, -0.2180928891660612, 0.0097016635502020724},
  {0.28398745322001751, 0.28398745322001751, 0.91580688620866835, 0.010432030319160769},
  {-0.28398745322001751, 0.28398745322001751, 0.91580688620866835, 0.010432030319160769},
  {0.28398745322001751, -0.28398745322001751, 0.91580688620866835, 0.010432030319160769},
  {0.28398745322001751, 0.28398745322001751, -0.91580688620866835, 0.010432030319160769},
  {-0.28398745322001751, -0.28398745322001751, 0.91580688620866835, 0.010432030319160769},
  {-0.28398745322001751, 0.28398745322001751, -0.91580688620866835, 0.010432030319160769},
  {0.28398745322001751, -0.28398745322001751, -0.91580688620866835, 0.010432030319160769},
  {-0.28398745322001751, -0.28398745322001751, -0.91580688620866835, 0.010432030319160769},
  {-0.28398745322001751, 0.91580688620866835, 0.28398745322001751, 0.010432030319160769},
  {0.28398745322001751, -0.91580688620866835, 0.28398745322001751, 0.010432030319160769},
  {0.28398745322001751, 0.91580688620866835, -0.28398745322001751, 0.010432030319160769},
  {-0.28398745322001751, -0.91580688620866835, 0.28398745322001751, 0.010432030319160769},
  {-0.28398745322001751, 0.91580688620866835, -0.28398745322001751, 0.010432030319160769},
  {0.28398745322001751, -0.91580688620866835, -0.28398745322001751, 0.010432030319160769},
  {-0.28398745322001751, -0.91580688620866835, -0.28398745322001751, 0.010432030319160769},
  {0.28398745322001751, 0.91580688620866835, 0.28398745322001751, 0.010432030319160769},
  {0.91580688620866835, 0.28398745322001751, 0.28398745322001751, 0.010432030319160769},
  {-0.91580688620866835, 0.28398745322001751, 0.28398745322001751, 0.010432030319160769},
  {0.91580688620866835, -0.28398745322001751, 0.28398745322001751, 0.010432030319160769},
  {0.91580688620866835, 0.28398745322001751, -0.28398745322001751, 0.010432030319160769},
  {-0.91580688620866835, -0.28398745322001751, 0.28398745322001751, 0.010432030319160769},
  {-0.91580688620866835, 0.28398745322001751, -0.28398745322001751, 0.010432030319160769},
  {0.91580688620866835, -0.28398745322001751, -0.28398745322001751, 0.010432030319160769},
  {-0.91580688620866835, -0.28398745322001751, -0.28398745322001751, 0.010432030319160769},
  {0.34911776009637641, 0.34911776009637641, 0.86961691518195405, 0.010916019799855001},
  {-0.34911776009637641, 0.34911776009637641, 0.86961691518195405, 0.010916019799855001},
  {0.34911776009637641, -0.34911776009637641, 0.86961691518195405, 0.010916019799855001},
  {0.34911776009637641, 0.34911776009637641, -0.86961691518195405, 0.010916019799855001},
  {-0.34911776009637641, -0.34911776009637641, 0.86961691518195405, 0.010916019799855001},
  {-0.34911776009637641, 0.34911776009637641, -0.86961691518195405, 0.010916019799855001},
  {0.34911776009637641, -0.34911776009637641, -0.86961691518195405, 0.010916019799855001},
  {-0.34911776009637641, -0.34911776009637641, -0.86961691518195405, 0.010916019799855001},
  {-0.34911776009637641, 0.86961691518195405, 0.34911776009637641, 0.010916019799855001},
  {0.34911776009637641, -0.86961691518195405, 0.34911776009637641, 0.010916019799855001},
  {0.34911776009637641, 0.86961691518195405, -0.34911776009637641, 0.010916019799855001},
  {-0.34911776009637641, -0.86961691518195405, 0.34911776009637641, 0.010916019799855001},
  {-0.34911776009637641, 0.86961691518195405, -0.34911776009637641, 0.010916019799855001},
  {0.34911776009637641, -0.86961691518195405, -0.34911776009637641, 0.010916019799855001},
  {-0.34911776009637641, -0.86961691518195405, -0.34911776009637641, 0.010916019799855001},
  {0.34911776009637641, 0.86961691518195405, 0.34911776009637641, 0.010916019799855001},
  {0.86961691518195405, 0.34911776009637641, 0.34911776009637641, 0.010916019799855001},
  {-0.86961691518195405, 0.34911776009637641, 0.34911776009637641, 0.010916019799855001},
  {0.86961691518195405, -0.34911776009637641, 0.34911776009637641, 0.010916019799855001},
  {0.86961691518195405, 0.34911776009637641, -0.34911776009637641, 0.010916019799855001},
  {-0.86961691518195405, -0.34911776009637641, 0.34911776009637641, 0.010916019799855001},
  {-0.86961691518195405, 0.34911776009637641, -0.34911776009637641, 0.010916019799855001},
  {0.86961691518195405, -0.34911776009637641, -0.34911776009637641, 0.010916019799855001},
  {-0.86961691518195405, -0.34911776009637641, -0.34911776009637641, 0.010916019799855001},
  {0.41214314614443093, 0.41214314614443093, 0.81257372229991565, 0.011218094911060898},
  {-0.41214314614443093, 0.41214314614443093, 0.81257372229991565, 0.011218094911060898},
  {0.41214314614443093, -0.41214314614443093, 0.81257372229991565, 0.011218094911060898},
  {0.41214314614443093, 0.41214314614443093, -0.81257372229991565, 0.011218094911060898},
  {-0.41214314614443093, -0.41214314614443093, 0.81257372229991565, 0.011218094911060898},
  {-0.41214314614443093, 0.41214314614443093, -0.81257372229991565, 0.011218094911060898},
  {0.41214314614443093, -0.41214314614443093, -0.81257372229991565, 0.011218094911060898},
  {-0.41214314614443093, -0.41214314614443093, -0.81257372229991565, 0.011218094911060898},
  {-0.41214314614443093, 0.81257372229991565, 0.41214314614443093, 0.011218094911060898},
  {0.41214314614443093, -0.81257372229991565, 0.41214314614443093, 0.011218094911060898},
  {0.41214314614443093, 0.81257372229991565, -0.41214314614443093, 0.011218094911060898},
  {-0.41214314614443093, -0.81257372229991565, 0.41214314614443093, 0.011218094911060898},
  {-0.41214314614443093, 0.81257372229991565, -0.41214314614443093, 0.011218094911060898},
  {0.41214314614443093, -0.81257372229991565, -0.41214314614443093, 0.011218094911060898},
  {-0.41214314614443093, -0.81257372229991565, -0.41214314614443093, 0.011218094911060898},
  {0.41214314614443093, 0.81257372229991565, 0.41214314614443093, 0.011218094911060898},
  {0.81257372229991565, 0.41214314614443093, 0.41214314614443093, 0.011218094911060898},
  {-0.81257372229991565, 0.41214314614443093, 0.41214314614443093, 0.011218094911060898},
  {0.81257372229991565, -0.41214314614443093, 0.41214314614443093, 0.011218094911060898},
  {0.81257372229991565, 0.41214314614443093, -0.41214314614443093, 0.011218094911060898},
  {-0.81257372229991565, -0.41214314614443093, 0.41214314614443093, 0.011218094911060898},
  {-0.81257372229991565, 0.41214314614443093, -0.41214314614443093, 0.011218094911060898},
  {0.81257372229991565, -0.41214314614443093, -0.41214314614443093, 0.011218094911060898},
  {-0.81257372229991565, -0.41214314614443093, -0.41214314614443093, 0.011218094911060898},
  {0.47189936271491267, 0.47189936271491267, 0.74472946963210651, 0.011386162518793453},
  {-0.47189936271491267, 0.47189936271491267, 0.74472946963210651, 0.011386162518793453},
  {0.47189936271491267, -0.47189936271491267, 0.74472946963210651, 0.011386162518793453},
  {0.47189936271491267, 0.47189936271491267, -0.74472946963210651, 0.011386162518793453},
  {-0.47189936271491267, -0.47189936271491267, 0.74472946963210651, 0.011386162518793453},
  {-0.47189936271491267, 0.47189936271491267, -0.74472946963210651, 0.011386162518793453},
  {0.47189936271491267, -0.47189936271491267, -0.74472946963210651, 0.011386162518793453},
  {-0.47189936271491267, -0.47189936271491267, -0.74472946963210651, 0.011386162518793453},
  {-0.47189936271491267, 0.74472946963210651, 0.47189936271491267, 0.011386162518793453},
  {0.47189936271491267, -0.74472946963210651, 0.47189936271491267, 0.011386162518793453},
  {0.47189936271491267, 0.74472946963210651, -0.47189936271491267, 0.011386162518793453},
  {-0.47189936271491267, -0.74472946963210651, 0.47189936271491267, 0.011386162518793453},
  {-0.47189936271491267, 0.74472946963210651, -0.47189936271491267, 0.011386162518793453},
  {0.47189936271491267, -0.74472946963210651, -0.47189936271491267, 0.011386162518793453},
  {-0.47189936271491267, -0.74472946963210651, -0.47189936271491267, 0.011386162518793453},
  {0.47189936271491267, 0.74472946963210651, 0.47189936271491267, 0.011386162518793453},
  {0.74472946963210651, 0.47189936271491267, 0.47189936271491267, 0.011386162518793453},
  {-0.74472946963210651, 0.47189936271491267, 0.47189936271491267, 0.011386162518793453},
  {0.74472946963210651, -0.47189936271491267, 0.47189936271491267, 0.011386162518793453},
  {0.74472946963210651, 0.47189936271491267, -0.47189936271491267, 0.011386162518793453},
  {-0.74472946963210651, -0.47189936271491267, 0.47189936271491267, 0.011386162518793453},
  {-0.74472946963210651, 0.47189936271491267, -0.47189936271491267, 0.011386162518793453},
  {0.74472946963210651, -0.47189936271491267, -0.47189936271491267, 0.011386162518793453},
  {-0.74472946963210651, -0.47189936271491267, -0.47189936271491267, 0.011386162518793453},
  {0.52731454528423372, 0.52731454528423372, 0.66624225373610435, 0.011460250090599007},
  {-0.52731454528423372, 0.52731454528423372, 0.66624225373610435, 0.011460250090599007},
  {0.52731454528423372, -0.52731454528423372, 0.66624225373610435, 0.011460250090599007},
  {0.52731454528423372, 0.52731454528423372, -0.66624225373610435, 0.011460250090599007},
  {-0.52731454528423372, -0.52731454528423372, 0.66624225373610435, 0.011460250090599007},
  {-0.52731454528423372, 0.52731454528423372, -0.66624225373610435, 0.011460250090599007},
  {0.52731454528423372, -0.52731454528423372, -0.66624225373610435, 0.011460250090599007},
  {-0.52731454528423372, -0.52731454528423372, -0.66624225373610435, 0.011460250090599007},
  {-0.52731454528423372, 0.66624225373610435, 0.52731454528423372, 0.011460250090599007},
  {0.52731454528423372, -0.66624225373610435, 0.52731454528423372, 0.011460250090599007},
  {0.52731454528423372, 0.66624225373610435, -0.52731454528423372, 0.011460250090599007},
  {-0.52731454528423372, -0.66624225373610435, 0.52731454528423372, 0.011460250090599007},
  {-0.52731454528423372, 0.66624225373610435, -0.52731454528423372, 0.011460250090599007},
  {0.52731454528423372, -0.66624225373610435, -0.52731454528423372, 0.011460250090599007},
  {-0.52731454528423372, -0.66624225373610435, -0.52731454528423372, 0.011460250090599007},
  {0.52731454528423372, 0.66624225373610435, 0.52731454528423372, 0.011460250090599007},
  {0.66624225373610435, 0.52731454528423372, 0.52731454528423372, 0.011460250090599007},
  {-0.66624225373610435, 0.52731454528423372, 0.52731454528423372, 0.011460250090599007},
  {0.66624225373610435, -0.52731454528423372, 0.52731454528423372, 0.011460250090599007},
  {0.66624225373610435, 0.52731454528423372, -0.52731454528423372, 0.011460250090599007},
  {-0.66624225373610435, -0.52731454528423372, 0.52731454528423372, 0.011460250090599007},
  {-0.66624225373610435, 0.52731454528423372, -0.52731454528423372, 0.011460250090599007},
  {0.66624225373610435, -0.52731454528423372, -0.52731454528423372, 0.011460250090599007},
  {-0.66624225373610435, -0.52731454528423372, -0.52731454528423372, 0.011460250090599007},
  {0.62094753324440188, 0.62094753324440188, 0.47838093807695226, 0.011471488049646438},
  {-0.62094753324440188, 0.62094753324440188, 0.47838093807695226, 0.011471488049646438},
  {0.62094753324440188, -0.62094753324440188, 0.47838093807695226, 0.011471488049646438},
  {0.62094753324440188, 0.62094753324440188, -0.47838093807695226, 0.011471488049646438},
  {-0.62094753324440188, -0.62094753324440188, 0.47838093807695226, 0.011471488049646438},
  {-0.62094753324440188, 0.62094753324440188, -0.47838093807695226, 0.011471488049646438},
  {0.62094753324440188, -0.62094753324440188, -0.47838093807695226, 0.011471488049646438},
  {-0.62094753324440188, -0.62094753324440188, -0.47838093807695226, 0.011471488049646438},
  {-0.62094753324440188, 0.47838093807695226, 0.62094753324440188, 0.011471488049646438},
  {0.62094753324440188, -0.47838093807695226, 0.62094753324440188, 0.011471488049646438},
  {0.62094753324440188, 0.47838093807695226, -0.62094753324440188, 0.011471488049646438},
  {-0.62094753324440188, -0.47838093807695226, 0.62094753324440188, 0.011471488049646438},
  {-0.62094753324440188, 0.47838093807695226, -0.62094753324440188, 0.011471488049646438},
  {0.62094753324440188, -0.47838093807695226, -0.62094753324440188, 0.011471488049646438},
  {-0.62094753324440188, -0.47838093807695226, -0.62094753324440188, 0.011471488049646438},
  {0.62094753324440188, 0.47838093807695226, 0.62094753324440188, 0.011471488049646438},
  {0.47838093807695226, 0.62094753324440188, 0.62094753324440188, 0.011471488049646438},
  {-0.47838093807695226, 0.62094753324440188, 0.62094753324440188, 0.011471488049646438},
  {0.47838093807695226, -0.62094753324440188, 0.62094753324440188, 0.011471488049646438},
  {0.47838093807695226, 0.62094753324440188, -0.62094753324440188, 0.011471488049646438},
  {-0.47838093807695226, -0.62094753324440188, 0.62094753324440188, 0.011471488049646438},
  {-0.47838093807695226, 0.62094753324440188, -0.62094753324440188, 0.011471488049646438},
  {0.47838093807695226, -0.62094753324440188, -0.62094753324440188, 0.011471488049646438},
  {-0.47838093807695226, -0.62094753324440188, -0.62094753324440188, 0.011471488049646438},
  {0.6569722711857291, 0.6569722711857291, 0.36983086645942581, 0.011473994785596702},
  {-0.6569722711857291, 0.6569722711857291, 0.36983086645942581, 0.011473994785596702},
  {0.6569722711857291, -0.6569722711857291, 0.36983086645942581, 0.011473994785596702},
  {0.6569722711857291, 0.6569722711857291, -0.36983086645942581, 0.011473994785596702},
  {-0.6569722711857291, -0.6569722711857291, 0.36983086645942581, 0.011473994785596702},
  {-0.6569722711857291, 0.6569722711857291, -0.36983086645942581, 0.011473994785596702},
  {0.6569722711857291, -0.6569722711857291, -0.36983086645942581, 0.011473994785596702},
  {-0.6569722711857291, -0.6569722711857291, -0.36983086645942581, 0.011473994785596702},
  {-0.6569722711857291, 0.36983086645942581, 0.6569722711857291, 0.011473994785596702},
  {0.6569722711857291, -0.36983086645942581, 0.6569722711857291, 0.011473994785596702},
  {0.6569722711857291, 0.36983086645942581, -0.6569722711857291, 0.011473994785596702},
  {-0.6569722711857291, -0.36983086645942581, 0.6569722711857291, 0.011473994785596702},
  {-0.6569722711857291, 0.36983086645942581, -0.6569722711857291, 0.011473994785596702},
  {0.6569722711857291, -0.36983086645942581, -0.6569722711857291, 0.011473994785596702},
  {-0.6569722711857291, -0.36983086645942581, -0.6569722711857291, 0.011473994785596702},
  {0.6569722711857291, 0.36983086645942581, 0.6569722711857291, 0.011473994785596702},
  {0.36983086645942581, 0.6569722711857291, 0.6569722711857291, 0.011473994785596702},
  {-0.36983086645942581, 0.6569722711857291, 0.6569722711857291, 0.011473994785596702},
  {0.36983086645942581, -0.6569722711857291, 0.6569722711857291, 0.011473994785596702},
  {0.36983086645942581, 0.6569722711857291, -0.6569722711857291, 0.011473994785596702},
  {-0.36983086645942581, -0.6569722711857291, 0.6569722711857291, 0.011473994785596702},
  {-0.36983086645942581, 0.6569722711857291, -0.6569722711857291, 0.011473994785596702},
  {0.36983086645942581, -0.6569722711857291, -0.6569722711857291, 0.011473994785596702},
  {-0.36983086645942581, -0.6569722711857291, -0.6569722711857291, 0.011473994785596702},
  {0.68417883090701426, 0.68417883090701426, 0.25258395570071829, 0.011501840416315927},
  {-0.68417883090701426, 0.68417883090701426, 0.25258395570071829, 0.011501840416315927},
  {0.68417883090701426, -0.68417883090701426, 0.25258395570071829, 0.011501840416315927},
  {0.68417883090701426, 0.68417883090701426, -0.25258395570071829, 0.011501840416315927},
  {-0.68417883090701426, -0.68417883090701426, 0.25258395570071829, 0.011501840416315927},
  {-0.68417883090701426, 0.68417883090701426, -0.25258395570071829, 0.011501840416315927},
  {0.68417883090701426, -0.68417883090701426, -0.25258395570071829, 0.011501840416315927},
  {-0.68417883090701426, -0.68417883090701426, -0.25258395570071829, 0.011501840416315927},
  {-0.68417883090701426, 0.25258395570071829, 0.68417883090701426, 0.011501840416315927},
  {0.68417883090701426, -0.25258395570071829, 0.68417883090701426, 0.011501840416315927},
  {0.68417883090701426, 0.25258395570071829, -0.68417883090701426, 0.011501840416315927},
  {-0.68417883090701426, -0.25258395570071829, 0.68417883090701426, 0.011501840416315927},
  {-0.68417883090701426, 0.25258395570071829, -0.68417883090701426, 0.011501840416315927},
  {0.68417883090701426, -0.25258395570071829, -0.68417883090701426, 0.011501840416315927},
  {-0.68417883090701426, -0.25258395570071829, -0.68417883090701426, 0.011501840416315927},
  {0.68417883090701426, 0.25258395570071829, 0.68417883090701426, 0.011501840416315927},
  {0.25258395570071829, 0.68417883090701426, 0.68417883090701426, 0.011501840416315927},
  {-0.25258395570071829, 0.68417883090701426, 0.68417883090701426, 0.011501840416315927},
  {0.25258395570071829, -0.68417883090701426, 0.68417883090701426, 0.011501840416315927},
  {0.25258395570071829, 0.68417883090701426, -0.68417883090701426, 0.011501840416315927},
  {-0.25258395570071829, -0.68417883090701426, 0.68417883090701426, 0.011501840416315927},
  {-0.25258395570071829, 0.68417883090701426, -0.68417883090701426, 0.011501840416315927},
  {0.25258395570071829, -0.68417883090701426, -0.68417883090701426, 0.011501840416315927},
  {-0.25258395570071829, -0.68417883090701426, -0.68417883090701426, 0.011501840416315927},
  {0.70126043301236307, 0.70126043301236307, 0.12832618665972312, 0.011545272921893316},
  {-0.70126043301236307, 0.70126043301236307, 0.12832618665972312, 0.011545272921893316},
  {0.70126043301236307, -0.70126043301236307, 0.12832618665972312, 0.011545272921893316},
  {0.70126043301236307, 0.70126043301236307, -0.12832618665972312, 0.011545272921893316},
  {-0.70126043301236307, -0.70126043301236307, 0.12832618665972312, 0.011545272921893316},
  {-0.70126043301236307, 0.70126043301236307, -0.12832618665972312, 0.011545272921893316},
  {0.70126043301236307, -0.70126043301236307, -0.12832618665972312, 0.011545272921893316},
  {-0.70126043301236307, -0.70126043301236307, -0.12832618665972312, 0.011545272921893316},
  {-0.70126043301236307, 0.12832618665972312, 0.70126043301236307, 0.011545272921893316},
  {0.70126043301236307, -0.12832618665972312, 0.70126043301236307, 0.011545272921893316},
  {0.70126043301236307, 0.12832618665972312, -0.70126043301236307, 0.011545272921893316},
  {-0.70126043301236307, -0.12832618665972312, 0.70126043301236307, 0.011545272921893316},
  {-0.70126043301236307, 0.12832618665972312, -0.70126043301236307, 0.011545272921893316},
  {0.70126043301236307, -0.12832618665972312, -0.70126043301236307, 0.011545272921893316},
  {-0.70126043301236307, -0.12832618665972312, -0.70126043301236307, 0.011545272921893316},
  {0.70126043301236307, 0.12832618665972312, 0.70126043301236307, 0.011545272921893316},
  {0.12832618665972312, 0.70126043301236307, 0.70126043301236307, 0.011545272921893316},
  {-0.12832618665972312, 0.70126043301236307, 0.70126043301236307, 0.011545272921893316},
  {0.12832618665972312, -0.70126043301236307, 0.70126043301236307, 0.011545272921893316},
  {0.12832618665972312, 0.70126043301236307, -0.70126043301236307, 0.011545272921893316},
  {-0.12832618665972312, -0.70126043301236307, 0.70126043301236307, 0.011545272921893316},
  {-0.12832618665972312, 0.70126043301236307, -0.70126043301236307, 0.011545272921893316},
  {0.12832618665972312, -0.70126043301236307, -0.70126043301236307, 0.011545272921893316},
  {-0.12832618665972312, -0.70126043301236307, -0.70126043301236307, 0.011545272921893316},
  {0.10723822154781661, 0.99423335482132236, 0, 0.0065055815576856206},
  {-0.10723822154781661, 0.99423335482132236, 0, 0.0065055815576856206},
  {0.10723822154781661, -0.99423335482132236, 0, 0.0065055815576856206},
  {-0.10723822154781661, -0.99423335482132236, 0, 0.0065055815576856206},
  {0.99423335482132236, 0.10723822154781661, 0, 0.0065055815576856206},
  {-0.99423335482132236, 0.10723822154781661, 0, 0.0065055815576856206},
  {0.99423335482132236, -0.10723822154781661, 0, 0.0065055815576856206},
  {-0.99423335482132236, -0.10723822154781661, 0, 0.0065055815576856206},
  {0.10723822154781661, 0, 0.99423335482132236, 0.0065055815576856206},
  {-0.10723822154781661, 0, 0.99423335482132236, 0.0065055815576856206},
  {0.10723822154781661, 0, -0.99423335482132236, 0.0065055815576856206},
  {-0.10723822154781661, 0, -0.99423335482132236, 0.0065055815576856206},
  {0.99423335482132236, 0, 0.10723822154781661, 0.0065055815576856206},
  {-0.99423335482132236, 0, 0.10723822154781661, 0.0065055815576856206},
  {0.99423335482132236, 0, -0.10723822154781661, 0.0065055815576856206},
  {-0.99423335482132236, 0, -0.10723822154781661, 0.0065055815576856206},
  {0, 0.10723822154781661, 0.99423335482132236, 0.0065055815576856206},
  {0, -0.10723822154781661, 0.99423335482132236, 0.0065055815576856206},
  {0, 0.10723822154781661, -0.99423335482132236, 0.0065055815576856206},
  {0, -0.10723822154781661, -0.99423335482132236, 0.0065055815576856206},
  {0, 0.99423335482132236, 0.10723822154781661, 0.0065055815576856206},
  {0, -0.99423335482132236, 0.10723822154781661, 0.0065055815576856206},
  {0, 0.99423335482132236, -0.10723822154781661, 0.0065055815576856206},
  {0, -0.99423335482132236, -0.10723822154781661, 0.0065055815576856206},
  {0.25820689594969681, 0.96608964329611902, 0, 0.0092125868536404153},
  {-0.25820689594969681, 0.96608964329611902, 0, 0.0092125868536404153},
  {0.25820689594969681, -0.96608964329611902, 0, 0.0092125868536404153},
  {-0.25820689594969681, -0.96608964329611902, 0, 0.0092125868536404153},
  {0.96608964329611902, 0.25820689594969681, 0, 0.0092125868536404153},
  {-0.96608964329611902, 0.25820689594969681, 0, 0.0092125868536404153},
  {0.96608964329611902, -0.25820689594969681, 0, 0.0092125868536404153},
  {-0.96608964329611902, -0.25820689594969681, 0, 0.0092125868536404153},
  {0.25820689594969681, 0, 0.96608964329611902, 0.0092125868536404153},
  {-0.25820689594969681, 0, 0.96608964329611902, 0.0092125868536404153},
  {0.25820689594969681, 0, -0.96608964329611902, 0.0092125868536404153},
  {-0.25820689594969681, 0, -0.96608964329611902, 0.0092125868536404153},
  {0.96608964329611902, 0, 0.25820689594969681, 0.0092125868536404153},
  {-0.96608964329611902, 0, 0.25820689594969681, 0.0092125868536404153},
  {0.96608964329611902, 0, -0.25820689594969681, 0.0092125868536404153},
  {-0.96608964329611902, 0, -0.25820689594969681, 0.0092125868536404153},
  {0, 0.25820689594969681, 0.96608964329611902, 0.0092125868536404153},
  {0, -0.25820689594969681, 0.96608964329611902, 0.0092125868536404153},
  {0, 0.25820689594969681, -0.96608964329611902, 0.0092125868536404153},
  {0, -0.25820689594969681, -0.96608964329611902, 0.0092125868536404153},
  {0, 0.96608964329611902, 0.25820689594969681, 0.0092125868536404153},
  {0, -0.96608964329611902, 0.25820689594969681, 0.0092125868536404153},
  {0, 0.96608964329611902, -0.25820689594969681, 0.0092125868536404153},
  {0, -0.96608964329611902, -0.25820689594969681, 0.0092125868536404153},
  {0.41727529553067172, 0.90878013168191052, 0, 0.010635212041756437},
  {-0.41727529553067172, 0.90878013168191052, 0, 0.010635212041756437},
  {0.41727529553067172, -0.90878013168191052, 0, 0.010635212041756437},
  {-0.41727529553067172, -0.90878013168191052, 0, 0.010635212041756437},
  {0.90878013168191052, 0.41727529553067172, 0, 0.010635212041756437},
  {-0.90878013168191052, 0.41727529553067172, 0, 0.010635212041756437},
  {0.90878013168191052, -0.41727529553067172, 0, 0.010635212041756437},
  {-0.90878013168191052, -0.41727529553067172, 0, 0.010635212041756437},
  {0.41727529553067172, 0, 0.90878013168191052, 0.010635212041756437},
  {-0.41727529553067172, 0, 0.90878013168191052, 0.010635212041756437},
  {0.41727529553067172, 0, -0.90878013168191052, 0.010635212041756437},
  {-0.41727529553067172, 0, -0.90878013168191052, 0.010635212041756437},
  {0.90878013168191052, 0, 0.41727529553067172, 0.010635212041756437},
  {-0.90878013168191052, 0, 0.41727529553067172, 0.010635212041756437},
  {0.90878013168191052, 0, -0.41727529553067172, 0.010635212041756437},
  {-0.90878013168191052, 0, -0.41727529553067172, 0.010635212041756437},
  {0, 0.41727529553067172, 0.90878013168191052, 0.010635212041756437},
  {0, -0.41727529553067172, 0.90878013168191052, 0.010635212041756437},
  {0, 0.41727529553067172, -0.90878013168191052, 0.010635212041756437},
  {0, -0.41727529553067172, -0.90878013168191052, 0.010635212041756437},
  {0, 0.90878013168191052, 0.41727529553067172, 0.010635212041756437},
  {0, -0.90878013168191052, 0.41727529553067172, 0.010635212041756437},
  {0, 0.90878013168191052, -0.41727529553067172, 0.010635212041756437},
  {0, -0.90878013168191052, -0.41727529553067172, 0.010635212041756437},
  {0.57003669117925027, 0.82161923706143347, 0, 0.011348843483974559},
  {-0.57003669117925027, 0.82161923706143347, 0, 0.011348843483974559},
  {0.57003669117925027, -0.82161923706143347, 0, 0.011348843483974559},
  {-0.57003669117925027, -0.82161923706143347, 0, 0.011348843483974559},
  {0.82161923706143347, 0.57003669117925027, 0, 0.011348843483974559},
  {-0.82161923706143347, 0.57003669117925027, 0, 0.011348843483974559},
  {0.82161923706143347, -0.57003669117925027, 0, 0.011348843483974559},
  {-0.82161923706143347, -0.57003669117925027, 0, 0.011348843483974559},
  {0.57003669117925027, 0, 0.82161923706143347, 0.011348843483974559},
  {-0.57003669117925027, 0, 0.82161923706143347, 0.011348843483974559},
  {0.57003669117925027, 0, -0.82161923706143347, 0.011348843483974559},
  {-0.57003669117925027, 0, -0.82161923706143347, 0.011348843483974559},
  {0.82161923706143347, 0, 0.57003669117925027, 0.011348843483974559},
  {-0.82161923706143347, 0, 0.57003669117925027, 0.011348843483974559},
  {0.82161923706143347, 0, -0.57003669117925027, 0.011348843483974559},
  {-0.82161923706143347, 0, -0.57003669117925027, 0.011348843483974559},
  {0, 0.57003669117925027, 0.82161923706143347, 0.011348843483974559},
  {0, -0.57003669117925027, 0.82161923706143347, 0.011348843483974559},
  {0, 0.57003669117925027, -0.82161923706143347, 0.011348843483974559},
  {0, -0.57003669117925027, -0.82161923706143347, 0.011348843483974559},
  {0, 0.82161923706143347, 0.57003669117925027, 0.011348843483974559},
  {0, -0.82161923706143347, 0.57003669117925027, 0.011348843483974559},
  {0, 0.82161923706143347, -0.57003669117925027, 0.011348843483974559},
  {0, -0.82161923706143347, -0.57003669117925027, 0.011348843483974559},
  {0.98279860182639467, 0.1771774022615325, 0.052106394770112544, 0.0081502695765074649},
  {-0.98279860182639467, 0.1771774022615325, 0.052106394770112544, 0.0081502695765074649},
  {0.98279860182639467, -0.1771774022615325, 0.052106394770112544, 0.0081502695765074649},
  {0.98279860182639467, 0.1771774022615325, -0.052106394770112544, 0.0081502695765074649},
  {-0.98279860182639467, -0.1771774022615325, 0.052106394770112544, 0.0081502695765074649},
  {0.98279860182639467, -0.1771774022615325, -0.052106394770112544, 0.0081502695765074649},
  {-0.98279860182639467, 0.1771774022615325, -0.052106394770112544, 0.0081502695765074649},
  {-0.98279860182639467, -0.1771774022615325, -0.052106394770112544, 0.0081502695765074649},
  {0.1771774022615325, 0.98279860182639467, 0.052106394770112544, 0.0081502695765074649},
  {-0.1771774022615325, 0.98279860182639467, 0.052106394770112544, 0.0081502695765074649},
  {0.1771774022615325, -0.98279860182639467, 0.052106394770112544, 0.0081502695765074649},
  {0.1771774022615325, 0.98279860182639467, -0.052106394770112544, 0.0081502695765074649},
  {-0.1771774022615325, -0.98279860182639467, 0.052106394770112544, 0.0081502695765074649},
  {0.1771774022615325, -0.98279860182639467, -0.052106394770112544, 0.0081502695765074649},
  {-0.1771774022615325, 0.98279860182639467, -0.052106394770112544, 0.0081502695765074649},
  {-0.1771774022615325, -0.98279860182639467, -0.052106394770112544, 0.0081502695765074649},
  {0.052106394770112544, 0.98279860182639467, 0.1771774022615325, 0.0081502695765074649},
  {-0.052106394770112544, 0.98279860182639467, 0.1771774022615325, 0.0081502695765074649},
  {0.052106394770112544, -0.98279860182639467, 0.1771774022615325, 0.0081502695765074649},
  {0.052106394770112544, 0.98279860182639467, -0.1771774022615325, 0.0081502695765074649},
  {-0.052106394770112544, -0.98279860182639467, 0.1771774022615325, 0.0081502695765074649},
  {0.052106394770112544, -0.98279860182639467, -0.1771774022615325, 0.0081502695765074649},
  {-0.052106394770112544, 0.98279860182639467, -0.1771774022615325, 0.0081502695765074649},
  {-0.052106394770112544, -0.98279860182639467, -0.1771774022615325, 0.0081502695765074649},
  {0.052106394770112544, 0.1771774022615325, 0.98279860182639467, 0.0081502695765074649},
  {-0.052106394770112544, 0.1771774022615325, 0.98279860182639467, 0.0081502695765074649},
  {0.052106394770112544, -0.1771774022615325, 0.98279860182639467, 0.0081502695765074649},
  {0.052106394770112544, 0.1771774022615325, -0.98279860182639467, 0.0081502695765074649},
  {-0.052106394770112544, -0.1771774022615325, 0.98279860182639467, 0.0081502695765074649},
  {0.052106394770112544, -0.1771774022615325, -0.98279860182639467, 0.0081502695765074649},
  {-0.052106394770112544, 0.1771774022615325, -0.98279860182639467, 0.0081502695765074649},
  {-0.052106394770112544, -0.1771774022615325, -0.98279860182639467, 0.0081502695765074649},
  {0.98279860182639467, 0.052106394770112544, 0.1771774022615325, 0.0081502695765074649},
  {-0.98279860182639467, 0.052106394770112544, 0.1771774022615325, 0.0081502695765074649},
  {0.98279860182639467, -0.052106394770112544, 0.1771774022615325, 0.0081502695765074649},
  {0.98279860182639467, 0.052106394770112544, -0.1771774022615325, 0.0081502695765074649},
  {-0.98279860182639467, -0.052106394770112544, 0.1771774022615325, 0.0081502695765074649},
  {0.98279860182639467, -0.052106394770112544, -0.1771774022615325, 0.0081502695765074649},
  {-0.98279860182639467, 0.052106394770112544, -0.1771774022615325, 0.0081502695765074649},
  {-0.98279860182639467, -0.052106394770112544, -0.1771774022615325, 0.0081502695765074649},
  {0.1771774022615325, 0.052106394770112544, 0.98279860182639467, 0.0081502695765074649},
  {-0.1771774022615325, 0.052106394770112544, 0.98279860182639467, 0.0081502695765074649},
  {0.1771774022615325, -0.052106394770112544, 0.98279860182639467, 0.0081502695765074649},
  {0.1771774022615325, 0.052106394770112544, -0.98279860182639467, 0.0081502695765074649},
  {-0.1771774022615325, -0.052106394770112544, 0.98279860182639467, 0.0081502695765074649},
  {0.1771774022615325, -0.052106394770112544, -0.98279860182639467, 0.0081502695765074649},
  {-0.1771774022615325, 0.052106394770112544, -0.98279860182639467, 0.0081502695765074649},
  {-0.1771774022615325, -0.052106394770112544, -0.98279860182639467, 0.0081502695765074649},
  {0.96242492303262284, 0.24757164634262879, 0.11156409571564851, 0.009343135395662094},
  {-0.96242492303262284, 0.24757164634262879, 0.11156409571564851, 0.009343135395662094},
  {0.96242492303262284, -0.24757164634262879, 0.11156409571564851, 0.009343135395662094},
  {0.96242492303262284, 0.24757164634262879, -0.11156409571564851, 0.009343135395662094},
  {-0.96242492303262284, -0.24757164634262879, 0.11156409571564851, 0.009343135395662094},
  {0.96242492303262284, -0.24757164634262879, -0.11156409571564851, 0.009343135395662094},
  {-0.96242492303262284, 0.24757164634262879, -0.11156409571564851, 0.009343135395662094},
  {-0.96242492303262284, -0.24757164634262879, -0.11156409571564851, 0.009343135395662094},
  {0.24757164634262879, 0.96242492303262284, 0.11156409571564851, 0.009343135395662094},
  {-0.24757164634262879, 0.96242492303262284, 0.11156409571564851, 0.009343135395662094},
  {0.24757164634262879, -0.96242492303262284, 0.11156409571564851, 0.009343135395662094},
  {0.24757164634262879, 0.96242492303262284, -0.11156409571564851, 0.009343135395662094},
  {-0.24757164634262879, -0.96242492303262284, 0.11156409571564851, 0.009343135395662094},
  {0.24757164634262879, -0.96242492303262284, -0.11156409571564851, 0.009343135395662094},
  {-0.24757164634262879, 0.96242492303262284, -0.11156409571564851, 0.009343135395662094},
  {-0.24757164634262879, -0.96242492303262284, -0.11156409571564851, 0.009343135395662094},
  {0.11156409571564851, 0.96242492303262284, 0.24757164634262879, 0.009343135395662094},
  {-0.11156409571564851, 0.96242492303262284, 0.24757164634262879, 0.009343135395662094},
  {0.11156409571564851, -0.96242492303262284, 0.24757164634262879, 0.009343135395662094},
  {0.11156409571564851, 0.96242492303262284, -0.24757164634262879, 0.009343135395662094},
  {-0.11156409571564851, -0.96242492303262284, 0.24757164634262879, 0.009343135395662094},
  {0.11156409571564851, -0.96242492303262284, -0.24757164634262879, 0.009343135395662094},
  {-0.11156409571564851, 0.96242492303262284, -0.24757164634262879, 0.009343135395662094},
  {-0.11156409571564851, -0.96242492303262284, -0.24757164634262879, 0.009343135395662094},
  {0.11156409571564851, 0.24757164634262879, 0.96242492303262284, 0.009343135395662094},
  {-0.11156409571564851, 0.24757164634262879, 0.96242492303262284, 0.009343135395662094},
  {0.11156409571564851, -0.24757164634262879, 0.96242492303262284, 0.009343135395662094},
  {0.11156409571564851, 0.24757164634262879, -0.96242492303262284, 0.009343135395662094},
  {-0.11156409571564851, -0.24757164634262879, 0.96242492303262284, 0.009343135395662094},
  {0.11156409571564851, -0.24757164634262879, -0.96242492303262284, 0.009343135395662094},
  {-0.11156409571564851, 0.24757164634262879, -0.96242492303262284, 0.009343135395662094},
  {-0.11156409571564851, -0.24757164634262879, -0.96242492303262284, 0.009343135395662094},
  {0.96242492303262284, 0.11156409571564851, 0.24757164634262879, 0.009343135395662094},
  {-0.96242492303262284, 0.11156409571564851, 0.24757164634262879, 0.009343135395662094},
  {0.96242492303262284, -0.11156409571564851, 0.24757164634262879, 0.009343135395662094},
  {0.96242492303262284, 0.11156409571564851, -0.24757164634262879, 0.009343135395662094},
  {-0.96242492303262284, -0.11156409571564851, 0.24757164634262879, 0.009343135395662094},
  {0.96242492303262284, -0.11156409571564851, -0.24757164634262879, 0.009343135395662094},
  {-0.96242492303262284, 0.11156409571564851, -0.24757164634262879, 0.009343135395662094},
  {-0.96242492303262284, -0.11156409571564851, -0.24757164634262879, 0.009343135395662094},
  {0.24757164634262879, 0.11156409571564851, 0.96242492303262284, 0.009343135395662094},
  {-0.24757164634262879, 0.11156409571564851, 0.96242492303262284, 0.009343135395662094},
  {0.24757164634262879, -0.11156409571564851, 0.96242492303262284, 0.009343135395662094},
  {0.24757164634262879, 0.11156409571564851, -0.96242492303262284, 0.009343135395662094},
  {-0.24757164634262879, -0.11156409571564851, 0.96242492303262284, 0.009343135395662094},
  {0.24757164634262879, -0.11156409571564851, -0.96242492303262284, 0.009343135395662094},
  {-0.24757164634262879, 0.11156409571564851, -0.96242492303262284, 0.009343135395662094},
  {-0.24757164634262879, -0.11156409571564851, -0.96242492303262284, 0.009343135395662094},
  {0.94020079941288115, 0.33546162890664888, 0.05905888853235372, 0.01005124658581385},
  {-0.94020079941288115, 0.33546162890664888, 0.05905888853235372, 0.01005124658581385},
  {0.94020079941288115, -0.33546162890664888, 0.05905888853235372, 0.01005124658581385},
  {0.94020079941288115, 0.33546162890664888, -0.05905888853235372, 0.01005124658581385},
  {-0.94020079941288115, -0.33546162890664888, 0.05905888853235372, 0.01005124658581385},
  {0.94020079941288115, -0.33546162890664888, -0.05905888853235372, 0.01005124658581385},
  {-0.94020079941288115, 0.33546162890664888, -0.05905888853235372, 0.01005124658581385},
  {-0.94020079941288115, -0.33546162890664888, -0.05905888853235372, 0.01005124658581385},
  {0.33546162890664888, 0.94020079941288115, 0.05905888853235372, 0.01005124658581385},
  {-0.33546162890664888, 0.94020079941288115, 0.05905888853235372, 0.01005124658581385},
  {0.33546162890664888, -0.94020079941288115, 0.05905888853235372, 0.01005124658581385},
  {0.33546162890664888, 0.94020079941288115, -0.05905888853235372, 0.01005124658581385},
  {-0.33546162890664888, -0.94020079941288115, 0.05905888853235372, 0.01005124658581385},
  {0.33546162890664888, -0.94020079941288115, -0.05905888853235372, 0.01005124658581385},
  {-0.33546162890664888, 0.94020079941288115, -0.05905888853235372, 0.01005124658581385},
  {-0.33546162890664888, -0.94020079941288115, -0.05905888853235372, 0.01005124658581385},
  {0.05905888853235372, 0.94020079941288115, 0.33546162890664888, 0.01005124658581385},
  {-0.05905888853235372, 0.94020079941288115, 0.33546162890664888, 0.01005124658581385},
  {0.05905888853235372, -0.94020079941288115, 0.33546162890664888, 0.01005124658581385},
  {0.05905888853235372, 0.94020079941288115, -0.33546162890664888, 0.01005124658581385},
  {-0.05905888853235372, -0.94020079941288115, 0.33546162890664888, 0.01005124658581385},
  {0.05905888853235372, -0.94020079941288115, -0.33546162890664888, 0.01005124658581385},
  {-0.05905888853235372, 0.94020079941288115, -0.33546162890664888, 0.01005124658581385},
  {-0.05905888853235372, -0.94020079941288115, -0.33546162890664888, 0.01005124658581385},
  {0.05905888853235372, 0.33546162890664888, 0.94020079941288115, 0.01005124658581385},
  {-0.05905888853235372, 0.33546162890664888, 0.94020079941288115, 0.01005124658581385},
  {0.05905888853235372, -0.33546162890664888, 0.94020079941288115, 0.01005124658581385},
  {0.05905888853235372, 0.33546162890664888, -0.94020079941288115, 0.01005124658581385},
  {-0.05905888853235372, -0.33546162890664888, 0.94020079941288115, 0.01005124658581385},
  {0.05905888853235372, -0.33546162890664888, -0.94020079941288115, 0.01005124658581385},
  {-0.05905888853235372, 0.33546162890664888, -0.94020079941288115, 0.01005124658581385},
  {-0.05905888853235372, -0.33546162890664888, -0.94020079941288115, 0.01005124658581385},
  {0.94020079941288115, 0.05905888853235372, 0.33546162890664888, 0.01005124658581385},
  {-0.94020079941288115, 0.05905888853235372, 0.33546162890664888, 0.01005124658581385},
  {0.94020079941288115, -0.05905888853235372, 0.33546162890664888, 0.01005124658581385},
  {0.94020079941288115, 0.05905888853235372, -0.33546162890664888, 0.01005124658581385},
  {-0.94020079941288115, -0.05905888853235372, 0.33546162890664888, 0.01005124658581385},
  {0.94020079941288115, -0.05905888853235372, -0.33546162890664888, 0.01005124658581385},
  {-0.94020079941288115, 0.05905888853235372, -0.33546162890664888, 0.01005124658581385},
  {-0.94020079941288115, -0.05905888853235372, -0.33546162890664888, 0.01005124658581385},
  {0.33546162890664888, 0.05905888853235372, 0.94020079941288115, 0.01005124658581385},
  {-0.33546162890664888, 0.05905888853235372, 0.94020079941288115, 0.01005124658581385},
  {0.33546162890664888, -0.05905888853235372, 0.94020079941288115, 0.01005124658581385},
  {0.33546162890664888, 0.05905888853235372, -0.94020079941288115, 0.01005124658581385},
  {-0.33546162890664888, -0.05905888853235372, 0.94020079941288115, 0.01005124658581385},
  {0.33546162890664888, -0.05905888853235372, -0.94020079941288115, 0.01005124658581385},
  {-0.33546162890664888, 0.05905888853235372, -0.94020079941288115, 0.01005124658581385},
  {-0.33546162890664888, -0.05905888853235372, -0.94020079941288115, 0.01005124658581385},
  {0.93208220401432018, 0.31736152466119771, 0.17465516775786288, 0.010180936061521024},
  {-0.93208220401432018, 0.31736152466119771, 0.17465516775786288, 0.010180936061521024},
  {0.93208220401432018, -0.31736152466119771, 0.17465516775786288, 0.010180936061521024},
  {0.93208220401432018, 0.31736152466119771, -0.17465516775786288, 0.010180936061521024},
  {-0.93208220401432018, -0.31736152466119771, 0.17465516775786288, 0.010180936061521024},
  {0.93208220401432018, -0.31736152466119771, -0.17465516775786288, 0.010180936061521024},
  {-0.93208220401432018, 0.31736152466119771, -0.17465516775786288, 0.010180936061521024},
  {-0.93208220401432018, -0.31736152466119771, -0.17465516775786288, 0.010180936061521024},
  {0.31736152466119771, 0.93208220401432018, 0.17465516775786288, 0.010180936061521024},
  {-0.31736152466119771, 0.93208220401432018, 0.17465516775786288, 0.010180936061521024},
  {0.31736152466119771, -0.93208220401432018, 0.17465516775786288, 0.010180936061521024},
  {0.31736152466119771, 0.93208220401432018, -0.17465516775786288, 0.010180936061521024},
  {-0.31736152466119771, -0.93208220401432018, 0.17465516775786288, 0.010180936061521024},
  {0.31736152466119771, -0.93208220401432018, -0.17465516775786288, 0.010180936061521024},
  {-0.31736152466119771, 0.93208220401432018, -0.17465516775786288, 0.010180936061521024},
  {-0.31736152466119771, -0.93208220401432018, -0.17465516775786288, 0.010180936061521024},
  {0.17465516775786288, 0.93208220401432018, 0.31736152466119771, 0.010180936061521024},
  {-0.17465516775786288, 0.93208220401432018, 0.31736152466119771, 0.010180936061521024},
  {0.17465516775786288, -0.93208220401432018, 0.31736152466119771, 0.010180936061521024},
  {0.17465516775786288, 0.93208220401432018, -0.31736152466119771, 0.010180936061521024},
  {-0.17465516775786288, -0.93208220401432018, 0.31736152466119771, 0.010180936061521024},
  {0.17465516775786288, -0.93208220401432018, -0.31736152466119771, 0.010180936061521024},
  {-0.17465516775786288, 0.93208220401432018, -0.31736152466119771, 0.010180936061521024},
  {-0.17465516775786288, -0.93208220401432018, -0.31736152466119771, 0.010180936061521024},
  {0.17465516775786288, 0.31736152466119771, 0.93208220401432018, 0.010180936061521024},
  {-0.17465516775786288, 0.31736152466119771, 0.93208220401432018, 0.010180936061521024},
  {0.17465516775786288, -0.31736152466119771, 0.93208220401432018, 0.010180936061521024},
  {0.17465516775786288, 0.31736152466119771, -0.93208220401432018, 0.010180936061521024},
  {-0.17465516775786288, -0.31736152466119771, 0.93208220401432018, 0.010180936061521024},
  {0.17465516775786288, -0.31736152466119771, -0.93208220401432018, 0.010180936061521024},
  {-0.17465516775786288, 0.31736152466119771, -0.93208220401432018, 0.010180936061521024},
  {-0.17465516775786288, -0.31736152466119771, -0.93208220401432018, 0.010180936061521024},
  {0.93208220401432018, 0.17465516775786288, 0.31736152466119771, 0.010180936061521024},
  {-0.93208220401432018, 0.17465516775786288, 0.31736152466119771, 0.010180936061521024},
  {0.93208220401432018, -0.17465516775786288, 0.31736152466119771, 0.010180936061521024},
  {0.93208220401432018, 0.17465516775786288, -0.31736152466119771, 0.010180936061521024},
  {-0.93208220401432018, -0.17465516775786288, 0.31736152466119771, 0.010180936061521024},
  {0.93208220401432018, -0.17465516775786288, -0.31736152466119771, 0.010180936061521024},
  {-0.93208220401432018, 0.17465516775786288, -0.31736152466119771, 0.010180936061521024},
  {-0.93208220401432018, -0.17465516775786288, -0.31736152466119771, 0.010180936061521024},
  {0.31736152466119771, 0.17465516775786288, 0.93208220401432018, 0.010180936061521024},
  {-0.31736152466119771, 0.17465516775786288, 0.93208220401432018, 0.010180936061521024},
  {0.31736152466119771, -0.17465516775786288, 0.93208220401432018, 0.010180936061521024},
  {0.31736152466119771, 0.17465516775786288, -0.93208220401432018, 0.010180936061521024},
  {-0.31736152466119771, -0.17465516775786288, 0.93208220401432018, 0.010180936061521024},
  {0.31736152466119771, -0.17465516775786288, -0.93208220401432018, 0.010180936061521024},
  {-0.31736152466119771, 0.17465516775786288, -0.93208220401432018, 0.010180936061521024},
  {-0.31736152466119771, -0.17465516775786288, -0.93208220401432018, 0.010180936061521024},
  {0.9043674199393299, 0.40902684270853568, 0.1217235051095989, 0.010660541746034315},
  {-0.9043674199393299, 0.40902684270853568, 0.1217235051095989, 0.010660541746034315},
  {0.9043674199393299, -0.40902684270853568, 0.1217235051095989, 0.010660541746034315},
  {0.9043674199393299, 0.40902684270853568, -0.1217235051095989, 0.010660541746034315},
  {-0.9043674199393299, -0.40902684270853568, 0.1217235051095989, 0.010660541746034315},
  {0.9043674199393299, -0.40902684270853568, -0.1217235051095989, 0.010660541746034315},
  {-0.9043674199393299, 0.40902684270853568, -0.1217235051095989, 0.010660541746034315},
  {-0.9043674199393299, -0.40902684270853568, -0.1217235051095989, 0.010660541746034315},
  {0.40902684270853568, 0.9043674199393299, 0.1217235051095989, 0.010660541746034315},
  {-0.40902684270853568, 0.9043674199393299, 0.1217235051095989, 0.010660541746034315},
  {0.40902684270853568, -0.9043674199393299, 0.1217235051095989, 0.010660541746034315},
  {0.40902684270853568, 0.9043674199393299, -0.1217235051095989, 0.010660541746034315},
  {-0.40902684270853568, -0.9043674199393299, 0.1217235051095989, 0.010660541746034315},
  {0.40902684270853568, -0.9043674199393299, -0.1217235051095989, 0.010660541746034315},
  {-0.40902684270853568, 0.9043674199393299, -0.1217235051095989, 0.010660541746034315},
  {-0.40902684270853568, -0.9043674199393299, -0.1217235051095989, 0.010660541746034315},
  {0.1217235051095989, 0.9043674199393299, 0.40902684270853568, 0.010660541746034315},
  {-0.1217235051095989, 0.9043674199393299, 0.40902684270853568, 0.010660541746034315},
  {0.1217235051095989, -0.9043674199393299, 0.40902684270853568, 0.010660541746034315},
  {0.1217235051095989, 0.9043674199393299, -0.40902684270853568, 0.010660541746034315},
  {-0.1217235051095989, -0.9043674199393299, 0.40902684270853568, 0.010660541746034315},
  {0.1217235051095989, -0.9043674199393299, -0.40902684270853568, 0.010660541746034315},
  {-0.1217235051095989, 0.9043674199393299, -0.40902684270853568, 0.010660541746034315},
  {-0.1217235051095989, -0.9043674199393299, -0.40902684270853568, 0.010660541746034315},
  {0.1217235051095989, 0.40902684270853568, 0.9043674199393299, 0.010660541746034315},
  {-0.1217235051095989, 0.40902684270853568, 0.9043674199393299, 0.010660541746034315},
  {0.1217235051095989, -0.40902684270853568, 0.9043674199393299, 0.010660541746034315},
  {0.1217235051095989, 0.40902684270853568, -0.9043674199393299, 0.010660541746034315},
  {-0.1217235051095989, -0.40902684270853568, 0.9043674199393299, 0.010660541746034315},
  {0.1217235051095989, -0.40902684270853568, -0.9043674199393299, 0.010660541746034315},
  {-0.1217235051095989, 0.40902684270853568, -0.9043674199393299, 0.010660541746034315},
  {-0.1217235051095989, -0.40902684270853568, -0.9043674199393299, 0.010660541746034315},
  {0.9043674199393299, 0.1217235051095989, 0.40902684270853568, 0.010660541746034315},
  {-0.9043674199393299, 0.1217235051095989, 0.40902684270853568, 0.010660541746034315},
  {0.9043674199393299, -0.1217235051095989, 0.40902684270853568, 0.010660541746034315},
  {0.9043674199393299, 0.1217235051095989, -0.40902684270853568, 0.010660541746034315},
  {-0.9043674199393299, -0.1217235051095989, 0.40902684270853568, 0.010660541746034315},
  {0.9043674199393299, -0.1217235051095989, -0.40902684270853568, 0.010660541746034315},
  {-0.9043674199393299, 0.1217235051095989, -0.40902684270853568, 0.010660541746034315},
  {-0.9043674199393299, -0.1217235051095989, -0.40902684270853568, 0.010660541746034315},
  {0.40902684270853568, 0.1217235051095989, 0.9043674199393299, 0.010660541746034315},
  {-0.40902684270853568, 0.1217235051095989, 0.9043674199393299, 0.010660541746034315},
  {0.40902684270853568, -0.1217235051095989, 0.9043674199393299, 0.010660541746034315},
  {0.40902684270853568, 0.1217235051095989, -0.9043674199393299, 0.010660541746034315},
  {-0.40902684270853568, -0.1217235051095989, 0.9043674199393299, 0.010660541746034315},
  {0.40902684270853568, -0.1217235051095989, -0.9043674199393299, 0.010660541746034315},
  {-0.40902684270853568, 0.1217235051095989, -0.9043674199393299, 0.010660541746034315},
  {-0.40902684270853568, -0.1217235051095989, -0.9043674199393299, 0.010660541746034315},
  {0.89124075600747465, 0.3854291150669224, 0.23902784793817244, 0.010752162755474637},
  {-0.89124075600747465, 0.3854291150669224, 0.23902784793817244, 0.010752162755474637},
  {0.89124075600747465, -0.3854291150669224, 0.23902784793817244, 0.010752162755474637},
  {0.89124075600747465, 0.3854291150669224, -0.23902784793817244, 0.010752162755474637},
  {-0.89124075600747465, -0.3854291150669224, 0.23902784793817244, 0.010752162755474637},
  {0.89124075600747465, -0.3854291150669224, -0.23902784793817244, 0.010752162755474637},
  {-0.89124075600747465, 0.3854291150669224, -0.23902784793817244, 0.010752162755474637},
  {-0.89124075600747465, -0.3854291150669224, -0.23902784793817244, 0.010752162755474637},
  {0.3854291150669224, 0.89124075600747465, 0.23902784793817244, 0.010752162755474637},
  {-0.3854291150669224, 0.89124075600747465, 0.23902784793817244, 0.010752162755474637},
  {0.3854291150669224, -0.89124075600747465, 0.23902784793817244, 0.010752162755474637},
  {0.3854291150669224, 0.89124075600747465, -0.23902784793817244, 0.010752162755474637},
  {-0.3854291150669224, -0.89124075600747465, 0.23902784793817244, 0.010752162755474637},
  {0.3854291150669224, -0.89124075600747465, -0.23902784793817244, 0.010752162755474637},
  {-0.3854291150669224, 0.89124075600747465, -0.23902784793817244, 0.010752162755474637},
  {-0.3854291150669224, -0.89124075600747465, -0.23902784793817244, 0.010752162755474637},
  {0.23902784793817244, 0.89124075600747465, 0.3854291150669224, 0.010752162755474637},
  {-0.23902784793817244, 0.89124075600747465, 0.3854291150669224, 0.010752162755474637},
  {0.23902784793817244, -0.89124075600747465, 0.3854291150669224, 0.010752162755474637},
  {0.23902784793817244, 0.89124075600747465, -0.3854291150669224, 0.010752162755474637},
  {-0.23902784793817244, -0.89124075600747465, 0.3854291150669224, 0.010752162755474637},
  {0.23902784793817244, -0.89124075600747465, -0.3854291150669224, 0.010752162755474637},
  {-0.23902784793817244, 0.89124075600747465, -0.3854291150669224, 0.010752162755474637},
  {-0.23902784793817244, -0.89124075600747465, -0.3854291150669224, 0.010752162755474637},
  {0.23902784793817244, 0.3854291150669224, 0.89124075600747465, 0.010752162755474637},
  {-0.23902784793817244, 0.3854291150669224, 0.89124075600747465, 0.010752162755474637},
  {0.23902784793817244, -0.3854291150669224, 0.89124075600747465, 0.010752162755474637},
  {0.23902784793817244, 0.3854291150669224, -0.89124075600747465, 0.010752162755474637},
  {-0.23902784793817244, -0.3854291150669224, 0.89124075600747465, 0.010752162755474637},
  {0.23902784793817244, -0.3854291150669224, -0.89124075600747465, 0.010752162755474637},
  {-0.23902784793817244, 0.3854291150669224, -0.89124075600747465, 0.010752162755474637},
  {-0.23902784793817244, -0.3854291150669224, -0.89124075600747465, 0.010752162755474637},
  {0.89124075600747465, 0.23902784793817244, 0.3854291150669224, 0.010752162755474637},
  {-0.89124075600747465, 0.23902784793817244, 0.3854291150669224, 0.010752162755474637},
  {0.89124075600747465, -0.23902784793817244, 0.3854291150669224, 0.010752162755474637},
  {0.89124075600747465, 0.23902784793817244, -0.3854291150669224, 0.010752162755474637},
  {-0.89124075600747465, -0.23902784793817244, 0.3854291150669224, 0.010752162755474637},
  {0.89124075600747465, -0.23902784793817244, -0.3854291150669224, 0.010752162755474637},
  {-0.89124075600747465, 0.23902784793817244, -0.3854291150669224, 0.010752162755474637},
  {-0.89124075600747465, -0.23902784793817244, -0.3854291150669224, 0.010752162755474637},
  {0.3854291150669224, 0.23902784793817244, 0.89124075600747465, 0.010752162755474637},
  {-0.3854291150669224, 0.23902784793817244, 0.89124075600747465, 0.010752162755474637},
  {0.3854291150669224, -0.23902784793817244, 0.89124075600747465, 0.010752162755474637},
  {0.3854291150669224, 0.23902784793817244, -0.89124075600747465, 0.010752162755474637},
  {-0.3854291150669224, -0.23902784793817244, 0.89124075600747465, 0.010752162755474637},
  {0.3854291150669224, -0.23902784793817244, -0.89124075600747465, 0.010752162755474637},
  {-0.3854291150669224, 0.23902784793817244, -0.89124075600747465, 0.010752162755474637},
  {-0.3854291150669224, -0.23902784793817244, -0.89124075600747465, 0.010752162755474637},
  {0.86764356284627075, 0.49322211848512848, 0.062662506241541988, 0.011062438286513447},
  {-0.86764356284627075, 0.49322211848512848, 0.062662506241541988, 0.011062438286513447},
  {0.86764356284627075, -0.49322211848512848, 0.062662506241541988, 0.011062438286513447},
  {0.86764356284627075, 0.49322211848512848, -0.062662506241541988, 0.011062438286513447},
  {-0.86764356284627075, -0.49322211848512848, 0.062662506241541988, 0.011062438286513447},
  {0.86764356284627075, -0.49322211848512848, -0.062662506241541988, 0.011062438286513447},
  {-0.86764356284627075, 0.49322211848512848, -0.062662506241541988, 0.011062438286513447},
  {-0.86764356284627075, -0.49322211848512848, -0.062662506241541988, 0.011062438286513447},
  {0.49322211848512848, 0.86764356284627075, 0.062662506241541988, 0.011062438286513447},
  {-0.49322211848512848, 0.86764356284627075, 0.062662506241541988, 0.011062438286513447},
  {0.49322211848512848, -0.86764356284627075, 0.062662506241541988, 0.011062438286513447},
  {0.49322211848512848, 0.86764356284627075, -0.062662506241541988, 0.011062438286513447},
  {-0.49322211848512848, -0.86764356284627075, 0.062662506241541988, 0.011062438286513447},
  {0.49322211848512848, -0.86764356284627075, -0.062662506241541988, 0.011062438286513447},
  {-0.49322211848512848, 0.86764356284627075, -0.062662506241541988, 0.011062438286513447},
  {-0.49322211848512848, -0.86764356284627075, -0.062662506241541988, 0.011062438286513447},
  {0.062662506241541988, 0.86764356284627075, 0.49322211848512848, 0.011062438286513447},
  {-0.062662506241541988, 0.86764356284627075, 0.49322211848512848, 0.011062438286513447},
  {0.062662506241541988, -0.86764356284627075, 0.49322211848512848, 0.011062438286513447},
  {0.062662506241541988, 0.86764356284627075, -0.49322211848512848, 0.011062438286513447},
  {-0.062662506241541988, -0.86764356284627075, 0.49322211848512848, 0.011062438286513447},
  {0.062662506241541988, -0.86764356284627075, -0.49322211848512848, 0.011062438286513447},
  {-0.062662506241541988, 0.86764356284627075, -0.49322211848512848, 0.011062438286513447},
  {-0.062662506241541988, -0.86764356284627075, -0.49322211848512848, 0.011062438286513447},
  {0.062662506241541988, 0.49322211848512848, 0.86764356284627075, 0.011062438286513447},
  {-0.062662506241541988, 0.49322211848512848, 0.86764356284627075, 0.011062438286513447},
  {0.062662506241541988, -0.49322211848512848, 0.86764356284627075, 0.011062438286513447},
  {0.062662506241541988, 0.49322211848512848, -0.86764356284627075, 0.011062438286513447},
  {-0.062662506241541988, -0.49322211848512848, 0.86764356284627075, 0.011062438286513447},
  {0.062662506241541988, -0.49322211848512848, -0.86764356284627075, 0.011062438286513447},
  {-0.062662506241541988, 0.49322211848512848, -0.86764356284627075, 0.011062438286513447},
  {-0.062662506241541988, -0.49322211848512848, -0.86764356284627075, 0.011062438286513447},
  {0.86764356284627075, 0.062662506241541988, 0.49322211848512848, 0.011062438286513447},
  {-0.86764356284627075, 0.062662506241541988, 0.49322211848512848, 0.011062438286513447},
  {0.86764356284627075, -0.062662506241541988, 0.49322211848512848, 0.011062438286513447},
  {0.86764356284627075, 0.062662506241541988, -0.49322211848512848, 0.011062438286513447},
  {-0.86764356284627075, -0.062662506241541988, 0.49322211848512848, 0.011062438286513447},
  {0.86764356284627075, -0.062662506241541988, -0.49322211848512848, 0.011062438286513447},
  {-0.86764356284627075, 0.062662506241541988, -0.49322211848512848, 0.011062438286513447},
  {-0.86764356284627075, -0.062662506241541988, -0.49322211848512848, 0.011062438286513447},
  {0.49322211848512848, 0.062662506241541988, 0.86764356284627075, 0.011062438286513447},
  {-0.49322211848512848, 0.062662506241541988, 0.86764356284627075, 0.011062438286513447},
  {0.49322211848512848, -0.062662506241541988, 0.86764356284627075, 0.011062438286513447},
  {0.49322211848512848, 0.062662506241541988, -0.86764356284627075, 0.011062438286513447},
  {-0.49322211848512848, -0.062662506241541988, 0.86764356284627075, 0.011062438286513447},
  {0.49322211848512848, -0.062662506241541988, -0.86764356284627075, 0.011062438286513447},
  {-0.49322211848512848, 0.062662506241541988, -0.86764356284627075, 0.011062438286513447},
  {-0.49322211848512848, -0.062662506241541988, -0.86764356284627075, 0.011062438286513447},
  {0.8581979986041619, 0.47853206759224348, 0.18575051945473373, 0.011072289696133737},
  {-0.8581979986041619, 0.47853206759224348, 0.18575051945473373, 0.011072289696133737},
  {0.8581979986041619, -0.47853206759224348, 0.18575051945473373, 0.011072289696133737},
  {0.8581979986041619, 0.47853206759224348, -0.18575051945473373, 0.011072289696133737},
  {-0.8581979986041619, -0.47853206759224348, 0.18575051945473373, 0.011072289696133737},
  {0.8581979986041619, -0.47853206759224348, -0.18575051945473373, 0.011072289696133737},
  {-0.8581979986041619, 0.47853206759224348, -0.18575051945473373, 0.011072289696133737},
  {-0.8581979986041619, -0.47853206759224348, -0.18575051945473373, 0.011072289696133737},
  {0.47853206759224348, 0.8581979986041619, 0.18575051945473373, 0.011072289696133737},
  {-0.47853206759224348, 0.8581979986041619, 0.18575051945473373, 0.011072289696133737},
  {0.47853206759224348, -0.8581979986041619, 0.18575051945473373, 0.011072289696133737},
  {0.47853206759224348, 0.8581979986041619, -0.18575051945473373, 0.011072289696133737},
  {-0.47853206759224348, -0.8581979986041619, 0.18575051945473373, 0.011072289696133737},
  {0.47853206759224348, -0.8581979986041619, -0.18575051945473373, 0.011072289696133737},
  {-0.47853206759224348, 0.8581979986041619, -0.18575051945473373, 0.011072289696133737},
  {-0.47853206759224348, -0.8581979986041619, -0.18575051945473373, 0.011072289696133737},
  {0.18575051945473373, 0.8581979986041619, 0.47853206759224348, 0.011072289696133737},
  {-0.18575051945473373, 0.8581979986041619, 0.47853206759224348, 0.011072289696133737},
  {0.18575051945473373, -0.8581979986041619, 0.47853206759224348, 0.011072289696133737},
  {0.18575051945473373, 0.8581979986041619, -0.47853206759224348, 0.011072289696133737},
  {-0.18575051945473373, -0.8581979986041619, 0.47853206759224348, 0.011072289696133737},
  {0.18575051945473373, -0.8581979986041619, -0.47853206759224348, 0.011072289696133737},
  {-0.18575051945473373, 0.8581979986041619, -0.47853206759224348, 0.011072289696133737},
  {-0.18575051945473373, -0.8581979986041619, -0.47853206759224348, 0.011072289696133737},
  {0.18575051945473373, 0.47853206759224348, 0.8581979986041619, 0.011072289696133737},
  {-0.18575051945473373, 0.47853206759224348, 0.8581979986041619, 0.011072289696133737},
  {0.18575051945473373, -0.47853206759224348, 0.8581979986041619, 0.011072289696133737},
  {0.18575051945473373, 0.47853206759224348, -0.8581979986041619, 0.011072289696133737},
  {-0.18575051945473373, -0.47853206759224348, 0.8581979986041619, 0.011072289696133737},
  {0.18575051945473373, -0.47853206759224348, -0.8581979986041619, 0.011072289696133737},
  {-0.18575051945473373, 0.47853206759224348, -0.8581979986041619, 0.011072289696133737},
  {-0.18575051945473373, -0.47853206759224348, -0.8581979986041619, 0.011072289696133737},
  {0.8581979986041619, 0.18575051945473373, 0.47853206759224348, 0.011072289696133737},
  {-0.8581979986041619, 0.18575051945473373, 0.47853206759224348, 0.011072289696133737},
  {0.8581979986041619, -0.18575051945473373, 0.47853206759224348, 0.011072289696133737},
  {0.8581979986041619, 0.18575051945473373, -0.47853206759224348, 0.011072289696133737},
  {-0.8581979986041619, -0.18575051945473373, 0.47853206759224348, 0.011072289696133737},
  {0.8581979986041619, -0.18575051945473373, -0.47853206759224348, 0.011072289696133737},
  {-0.8581979986041619, 0.18575051945473373, -0.47853206759224348, 0.011072289696133737},
  {-0.8581979986041619, -0.18575051945473373, -0.47853206759224348, 0.011072289696133737},
  {0.47853206759224348, 0.18575051945473373, 0.8581979986041619, 0.011072289696133737},
  {-0.47853206759224348, 0.18575051945473373, 0.8581979986041619, 0.011072289696133737},
  {0.47853206759224348, -0.18575051945473373, 0.8581979986041619, 0.011072289696133737},
  {0.47853206759224348, 0.18575051945473373, -0.8581979986041619, 0.011072289696133737},
  {-0.47853206759224348, -0.18575051945473373, 0.8581979986041619, 0.011072289696133737},
  {0.47853206759224348, -0.18575051945473373, -0.8581979986041619, 0.011072289696133737},
  {-0.47853206759224348, 0.18575051945473373, -0.8581979986041619, 0.011072289696133737},
  {-0.47853206759224348, -0.18575051945473373, -0.8581979986041619, 0.011072289696133737},
  {0.83967536240498564, 0.45074225931570638, 0.30294669735289831, 0.011121592794205997},
  {-0.83967536240498564, 0.45074225931570638, 0.30294669735289831, 0.011121592794205997},
  {0.83967536240498564, -0.45074225931570638, 0.30294669735289831, 0.011121592794205997},
  {0.83967536240498564, 0.45074225931570638, -0.30294669735289831, 0.011121592794205997},
  {-0.83967536240498564, -0.45074225931570638, 0.30294669735289831, 0.011121592794205997},
  {0.83967536240498564, -0.45074225931570638, -0.30294669735289831, 0.011121592794205997},
  {-0.83967536240498564, 0.45074225931570638, -0.30294669735289831, 0.011121592794205997},
  {-0.83967536240498564, -0.45074225931570638, -0.30294669735289831, 0.011121592794205997},
  {0.45074225931570638, 0.83967536240498564, 0.30294669735289831, 0.011121592794205997},
  {-0.45074225931570638, 0.83967536240498564, 0.30294669735289831, 0.011121592794205997},
  {0.45074225931570638, -0.83967536240498564, 0.30294669735289831, 0.011121592794205997},
  {0.45074225931570638, 0.83967536240498564, -0.30294669735289831, 0.011121592794205997},
  {-0.45074225931570638, -0.83967536240498564, 0.30294669735289831, 0.011121592794205997},
  {0.45074225931570638, -0.83967536240498564, -0.30294669735289831, 0.011121592794205997},
  {-0.45074225931570638, 0.83967536240498564, -0.30294669735289831, 0.011121592794205997},
  {-0.45074225931570638, -0.83967536240498564, -0.30294669735289831, 0.011121592794205997},
  {0.30294669735289831, 0.83967536240498564, 0.45074225931570638, 0.011121592794205997},
  {-0.30294669735289831, 0.83967536240498564, 0.45074225931570638, 0.011121592794205997},
  {0.30294669735289831, -0.83967536240498564, 0.45074225931570638, 0.011121592794205997},
  {0.30294669735289831, 0.83967536240498564, -0.45074225931570638, 0.011121592794205997},
  {-0.30294669735289831, -0.83967536240498564, 0.45074225931570638, 0.011121592794205997},
  {0.30294669735289831, -0.83967536240498564, -0.45074225931570638, 0.011121592794205997},
  {-0.30294669735289831, 0.83967536240498564, -0.45074225931570638, 0.011121592794205997},
  {-0.30294669735289831, -0.83967536240498564, -0.45074225931570638, 0.011121592794205997},
  {0.30294669735289831, 0.45074225931570638, 0.83967536240498564, 0.011121592794205997},
  {-0.30294669735289831, 0.45074225931570638, 0.83967536240498564, 0.011121592794205997},
  {0.30294669735289831, -0.45074225931570638, 0.83967536240498564, 0.011121592794205997},
  {0.30294669735289831, 0.45074225931570638, -0.83967536240498564, 0.011121592794205997},
  {-0.30294669735289831, -0.45074225931570638, 0.83967536240498564, 0.011121592794205997},
  {0.30294669735289831, -0.45074225931570638, -0.83967536240498564, 0.011121592794205997},
  {-0.30294669735289831, 0.45074225931570638, -0.83967536240498564, 0.011121592794205997},
  {-0.30294669735289831, -0.45074225931570638, -0.83967536240498564, 0.011121592794205997},
  {0.83967536240498564, 0.30294669735289831, 0.45074225931570638, 0.011121592794205997},
  {-0.83967536240498564, 0.30294669735289831, 0.45074225931570638, 0.011121592794205997},
  {0.83967536240498564, -0.30294669735289831, 0.45074225931570638, 0.011121592794205997},
  {0.83967536240498564, 0.30294669735289831, -0.45074225931570638, 0.011121592794205997},
  {-0.83967536240498564, -0.30294669735289831, 0.45074225931570638, 0.011121592794205997},
  {0.83967536240498564, -0.30294669735289831, -0.45074225931570638, 0.011121592794205997},
  {-0.83967536240498564, 0.30294669735289831, -0.45074225931570638, 0.011121592794205997},
  {-0.83967536240498564, -0.30294669735289831, -0.45074225931570638, 0.011121592794205997},
  {0.45074225931570638, 0.30294669735289831, 0.83967536240498564, 0.011121592794205997},
  {-0.45074225931570638, 0.30294669735289831, 0.83967536240498564, 0.011121592794205997},
  {0.45074225931570638, -0.30294669735289831, 0.83967536240498564, 0.011121592794205997},
  {0.45074225931570638, 0.30294669735289831, -0.83967536240498564, 0.011121592794205997},
  {-0.45074225931570638, -0.30294669735289831, 0.83967536240498564, 0.011121592794205997},
  {0.45074225931570638, -0.30294669735289831, -0.83967536240498564, 0.011121592794205997},
  {-0.45074225931570638, 0.30294669735289831, -0.83967536240498564, 0.011121592794205997},
  {-0.45074225931570638, -0.30294669735289831, -0.83967536240498564, 0.011121592794205997},
  {0.81652885640221884, 0.56321230207620998, 0.12677748006842818, 0.011336553076873987},
  {-0.81652885640221884, 0.56321230207620998, 0.12677748006842818, 0.011336553076873987},
  {0.81652885640221884, -0.56321230207620998, 0.12677748006842818, 0.011336553076873987},
  {0.81652885640221884, 0.56321230207620998, -0.12677748006842818, 0.011336553076873987},
  {-0.81652885640221884, -0.56321230207620998, 0.12677748006842818, 0.011336553076873987},
  {0.81652885640221884, -0.56321230207620998, -0.12677748006842818, 0.011336553076873987},
  {-0.81652885640221884, 0.56321230207620998, -0.12677748006842818, 0.011336553076873987},
  {-0.81652885640221884, -0.56321230207620998, -0.12677748006842818, 0.011336553076873987},
  {0.56321230207620998, 0.81652885640221884, 0.12677748006842818, 0.011336553076873987},
  {-0.56321230207620998, 0.81652885640221884, 0.12677748006842818, 0.011336553076873987},
  {0.56321230207620998, -0.81652885640221884, 0.12677748006842818, 0.011336553076873987},
  {0.56321230207620998, 0.81652885640221884, -0.12677748006842818, 0.011336553076873987},
  {-0.56321230207620998, -0.81652885640221884, 0.12677748006842818, 0.011336553076873987},
  {0.56321230207620998, -0.81652885640221884, -0.12677748006842818, 0.011336553076873987},
  {-0.56321230207620998, 0.81652885640221884, -0.12677748006842818, 0.011336553076873987},
  {-0.56321230207620998, -0.81652885640221884, -0.12677748006842818, 0.011336553076873987},
  {0.12677748006842818, 0.81652885640221884, 0.56321230207620998, 0.011336553076873987},
  {-0.12677748006842818, 0.81652885640221884, 0.56321230207620998, 0.011336553076873987},
  {0.12677748006842818, -0.81652885640221884, 0.56321230207620998, 0.011336553076873987},
  {0.12677748006842818, 0.81652885640221884, -0.56321230207620998, 0.011336553076873987},
  {-0.12677748006842818, -0.81652885640221884, 0.56321230207620998, 0.011336553076873987},
  {0.12677748006842818, -0.81652885640221884, -0.56321230207620998, 0.011336553076873987},
  {-0.12677748006842818, 0.81652885640221884, -0.56321230207620998, 0.011336553076873987},
  {-0.12677748006842818, -0.81652885640221884, -0.56321230207620998, 0.011336553076873987},
  {0.12677748006842818, 0.56321230207620998, 0.81652885640221884, 0.011336553076873987},
  {-0.12677748006842818, 0.56321230207620998, 0.81652885640221884, 0.011336553076873987},
  {0.12677748006842818, -0.56321230207620998, 0.81652885640221884, 0.011336553076873987},
  {0.12677748006842818, 0.56321230207620998, -0.81652885640221884, 0.011336553076873987},
  {-0.12677748006842818, -0.56321230207620998, 0.81652885640221884, 0.011336553076873987},
  {0.12677748006842818, -0.56321230207620998, -0.81652885640221884, 0.011336553076873987},
  {-0.12677748006842818, 0.56321230207620998, -0.81652885640221884, 0.011336553076873987},
  {-0.12677748006842818, -0.56321230207620998, -0.81652885640221884, 0.011336553076873987},
  {0.81652885640221884, 0.12677748006842818, 0.56321230207620998, 0.011336553076873987},
  {-0.81652885640221884, 0.12677748006842818, 0.56321230207620998, 0.011336553076873987},
  {0.81652885640221884, -0.12677748006842818, 0.56321230207620998, 0.011336553076873987},
  {0.81652885640221884, 0.12677748006842818, -0.56321230207620998, 0.011336553076873987},
  {-0.81652885640221884, -0.12677748006842818, 0.56321230207620998, 0.011336553076873987},
  {0.81652885640221884, -0.12677748006842818, -0.56321230207620998, 0.011336553076873987},
  {-0.81652885640221884, 0.12677748006842818, -0.56321230207620998, 0.011336553076873987},
  {-0.81652885640221884, -0.12677748006842818, -0.56321230207620998, 0.011336553076873987},
  {0.56321230207620998, 0.12677748006842818, 0.81652885640221884, 0.011336553076873987},
  {-0.56321230207620998, 0.12677748006842818, 0.81652885640221884, 0.011336553076873987},
  {0.56321230207620998, -0.12677748006842818, 0.81652885640221884, 0.011336553076873987},
  {0.56321230207620998, 0.12677748006842818, -0.81652885640221884, 0.011336553076873987},
  {-0.56321230207620998, -0.12677748006842818, 0.81652885640221884, 0.011336553076873987},
  {0.56321230207620998, -0.12677748006842818, -0.81652885640221884, 0.011336553076873987},
  {-0.56321230207620998, 0.12677748006842818, -0.81652885640221884, 0.011336553076873987},
  {-0.56321230207620998, -0.12677748006842818, -0.81652885640221884, 0.011336553076873987},
  {0.80154693707835289, 0.54343035696939002, 0.24941121623622375, 0.011322415128385551},
  {-0.80154693707835289, 0.54343035696939002, 0.24941121623622375, 0.011322415128385551},
  {0.80154693707835289, -0.54343035696939002, 0.24941121623622375, 0.011322415128385551},
  {0.80154693707835289, 0.54343035696939002, -0.24941121623622375, 0.011322415128385551},
  {-0.80154693707835289, -0.54343035696939002, 0.24941121623622375, 0.011322415128385551},
  {0.80154693707835289, -0.54343035696939002, -0.24941121623622375, 0.011322415128385551},
  {-0.80154693707835289, 0.54343035696939002, -0.24941121623622375, 0.011322415128385551},
  {-0.80154693707835289, -0.54343035696939002, -0.24941121623622375, 0.011322415128385551},
  {0.54343035696939002, 0.80154693707835289, 0.24941121623622375, 0.011322415128385551},
  {-0.54343035696939002, 0.80154693707835289, 0.24941121623622375, 0.011322415128385551},
  {0.54343035696939002, -0.80154693707835289, 0.24941121623622375, 0.011322415128385551},
  {0.54343035696939002, 0.80154693707835289, -0.24941121623622375, 0.011322415128385551},
  {-0.54343035696939002, -0.80154693707835289, 0.24941121623622375, 0.011322415128385551},
  {0.54343035696939002, -0.80154693707835289, -0.24941121623622375, 0.011322415128385551},
  {-0.54343035696939002, 0.80154693707835289, -0.24941121623622375, 0.011322415128385551},
  {-0.54343035696939002, -0.80154693707835289, -0.24941121623622375, 0.011322415128385551},
  {0.24941121623622375, 0.80154693707835289, 0.54343035696939002, 0.011322415128385551},
  {-0.24941121623622375, 0.80154693707835289, 0.54343035696939002, 0.011322415128385551},
  {0.24941121623622375, -0.80154693707835289, 0.54343035696939002, 0.011322415128385551},
  {0.24941121623622375, 0.80154693707835289, -0.54343035696939002, 0.011322415128385551},
  {-0.24941121623622375, -0.80154693707835289, 0.54343035696939002, 0.011322415128385551},
  {0.24941121623622375, -0.80154693707835289, -0.54343035696939002, 0.011322415128385551},
  {-0.24941121623622375, 0.80154693707835289, -0.54343035696939002, 0.011322415128385551},
  {-0.24941121623622375, -0.80154693707835289, -0.54343035696939002, 0.011322415128385551},
  {0.24941121623622375, 0.54343035696939002, 0.80154693707835289, 0.011322415128385551},
  {-0.24941121623622375, 0.54343035696939002, 0.80154693707835289, 0.011322415128385551},
  {0.24941121623622375, -0.54343035696939002, 0.80154693707835289, 0.011322415128385551},
  {0.24941121623622375, 0.54343035696939002, -0.80154693707835289, 0.011322415128385551},
  {-0.24941121623622375, -0.54343035696939002, 0.80154693707835289, 0.011322415128385551},
  {0.24941121623622375, -0.54343035696939002, -0.80154693707835289, 0.011322415128385551},
  {-0.24941121623622375, 0.54343035696939002, -0.80154693707835289, 0.011322415128385551},
  {-0.24941121623622375, -0.54343035696939002, -0.80154693707835289, 0.011322415128385551},
  {0.80154693707835289, 0.24941121623622375, 0.54343035696939002, 0.011322415128385551},
  {-0.80154693707835289, 0.24941121623622375, 0.54343035696939002, 0.011322415128385551},
  {0.80154693707835289, -0.24941121623622375, 0.54343035696939002, 0.011322415128385551},
  {0.80154693707835289, 0.24941121623622375, -0.54343035696939002, 0.011322415128385551},
  {-0.80154693707835289, -0.24941121623622375, 0.54343035696939002, 0.011322415128385551},
  {0.80154693707835289, -0.24941121623622375, -0.54343035696939002, 0.011322415128385551},
  {-0.80154693707835289, 0.24941121623622375, -0.54343035696939002, 0.011322415128385551},
  {-0.80154693707835289, -0.24941121623622375, -0.54343035696939002, 0.011322415128385551},
  {0.54343035696939002, 0.24941121623622375, 0.80154693707835289, 0.011322415128385551},
  {-0.54343035696939002, 0.24941121623622375, 0.80154693707835289, 0.011322415128385551},
  {0.54343035696939002, -0.24941121623622375, 0.80154693707835289, 0.011322415128385551},
  {0.54343035696939002, 0.24941121623622375, -0.80154693707835289, 0.011322415128385551},
  {-0.54343035696939002, -0.24941121623622375, 0.80154693707835289, 0.011322415128385551},
  {0.54343035696939002, -0.24941121623622375, -0.80154693707835289, 0.011322415128385551},
  {-0.54343035696939002, 0.24941121623622375, -0.80154693707835289, 0.011322415128385551},
  {-0.54343035696939002, -0.24941121623622375, -0.80154693707835289, 0.011322415128385551},
  {0.77735630690703506, 0.51235184864198713, 0.36498322605976541, 0.0113382503403834},
  {-0.77735630690703506, 0.51235184864198713, 0.36498322605976541, 0.0113382503403834},
  {0.77735630690703506, -0.51235184864198713, 0.36498322605976541, 0.0113382503403834},
  {0.77735630690703506, 0.51235184864198713, -0.36498322605976541, 0.0113382503403834},
  {-0.77735630690703506, -0.51235184864198713, 0.36498322605976541, 0.0113382503403834},
  {0.77735630690703506, -0.51235184864198713, -0.36498322605976541, 0.0113382503403834},
  {-0.77735630690703506, 0.51235184864198713, -0.36498322605976541, 0.0113382503403834},
  {-0.77735630690703506, -0.51235184864198713, -0.36498322605976541, 0.0113382503403834},
  {0.51235184864198713, 0.77735630690703506, 0.36498322605976541, 0.0113382503403834},
  {-0.51235184864198713, 0.77735630690703506, 0.36498322605976541, 0.0113382503403834},
  {0.51235184864198713, -0.77735630690703506, 0.36498322605976541, 0.0113382503403834},
  {0.51235184864198713, 0.77735630690703506, -0.36498322605976541, 0.0113382503403834},
  {-0.51235184864198713, -0.77735630690703506, 0.36498322605976541, 0.0113382503403834},
  {0.51235184864198713, -0.77735630690703506, -0.36498322605976541, 0.0113382503403834},
  {-0.51235184864198713, 0.77735630690703506, -0.36498322605976541, 0.0113382503403834},
  {-0.51235184864198713, -0.77735630690703506, -0.36498322605976541, 0.0113382503403834},
  {0.36498322605976541, 0.77735630690703506, 0.51235184864198713, 0.0113382503403834},
  {-0.36498322605976541, 0.77735630690703506, 0.51235184864198713, 0.0113382503403834},
  {0.36498322605976541, -0.77735630690703506, 0.51235184864198713, 0.0113382503403834},
  {0.36498322605976541, 0.77735630690703506, -0.51235184864198713, 0.0113382503403834},
  {-0.36498322605976541, -0.77735630690703506, 0.51235184864198713, 0.0113382503403834},
  {0.36498322605976541, -0.77735630690703506, -0.51235184864198713, 0.0113382503403834},
  {-0.36498322605976541, 0.77735630690703506, -0.51235184864198713, 0.0113382503403834},
  {-0.36498322605976541, -0.77735630690703506, -0.51235184864198713, 0.0113382503403834},
  {0.36498322605976541, 0.51235184864198713, 0.77735630690703506, 0.0113382503403834},
  {-0.36498322605976541, 0.51235184864198713, 0.77735630690703506, 0.0113382503403834},
  {0.36498322605976541, -0.51235184864198713, 0.77735630690703506, 0.0113382503403834},
  {0.36498322605976541, 0.51235184864198713, -0.77735630690703506, 0.0113382503403834},
  {-0.36498322605976541, -0.51235184864198713, 0.77735630690703506, 0.0113382503403834},
  {0.36498322605976541, -0.51235184864198713, -0.77735630690703506, 0.0113382503403834},
  {-0.36498322605976541, 0.51235184864198713, -0.77735630690703506, 0.0113382503403834},
  {-0.36498322605976541, -0.51235184864198713, -0.77735630690703506, 0.0113382503403834},
  {0.77735630690703506, 0.36498322605976541, 0.51235184864198713, 0.0113382503403834},
  {-0.77735630690703506, 0.36498322605976541, 0.51235184864198713, 0.0113382503403834},
  {0.77735630690703506, -0.36498322605976541, 0.51235184864198713, 0.0113382503403834},
  {0.77735630690703506, 0.36498322605976541, -0.51235184864198713, 0.0113382503403834},
  {-0.77735630690703506, -0.36498322605976541, 0.51235184864198713, 0.0113382503403834},
  {0.77735630690703506, -0.36498322605976541, -0.51235184864198713, 0.0113382503403834},
  {-0.77735630690703506, 0.36498322605976541, -0.51235184864198713, 0.0113382503403834},
  {-0.77735630690703506, -0.36498322605976541, -0.51235184864198713, 0.0113382503403834},
  {0.51235184864198713, 0.36498322605976541, 0.77735630690703506, 0.0113382503403834},
  {-0.51235184864198713, 0.36498322605976541, 0.77735630690703506, 0.0113382503403834},
  {0.51235184864198713, -0.36498322605976541, 0.77735630690703506, 0.0113382503403834},
  {0.51235184864198713, 0.36498322605976541, -0.77735630690703506, 0.0113382503403834},
  {-0.51235184864198713, -0.36498322605976541, 0.77735630690703506, 0.0113382503403834},
  {0.51235184864198713, -0.36498322605976541, -0.77735630690703506, 0.0113382503403834},
  {-0.51235184864198713, 0.36498322605976541, -0.77735630690703506, 0.0113382503403834},
  {-0.51235184864198713, -0.36498322605976541, -0.77735630690703506, 0.0113382503403834},
  {0.76616212139003936, 0.63942796347491015, 0.064245492242207852, 0.011508302534349396},
  {-0.76616212139003936, 0.63942796347491015, 0.064245492242207852, 0.011508302534349396},
  {0.76616212139003936, -0.63942796347491015, 0.064245492242207852, 0.011508302534349396},
  {0.76616212139003936, 0.63942796347491015, -0.064245492242207852, 0.011508302534349396},
  {-0.76616212139003936, -0.63942796347491015, 0.064245492242207852, 0.011508302534349396},
  {0.76616212139003936, -0.63942796347491015, -0.064245492242207852, 0.011508302534349396},
  {-0.76616212139003936, 0.63942796347491015, -0.064245492242207852, 0.011508302534349396},
  {-0.76616212139003936, -0.63942796347491015, -0.064245492242207852, 0.011508302534349396},
  {0.63942796347491015, 0.76616212139003936, 0.064245492242207852, 0.011508302534349396},
  {-0.63942796347491015, 0.76616212139003936, 0.064245492242207852, 0.011508302534349396},
  {0.63942796347491015, -0.76616212139003936, 0.064245492242207852, 0.011508302534349396},
  {0.63942796347491015, 0.76616212139003936, -0.064245492242207852, 0.011508302534349396},
  {-0.63942796347491015, -0.76616212139003936, 0.064245492242207852, 0.011508302534349396},
  {0.63942796347491015, -0.76616212139003936, -0.064245492242207852, 0.011508302534349396},
  {-0.63942796347491015, 0.76616212139003936, -0.064245492242207852, 0.011508302534349396},
  {-0.63942796347491015, -0.76616212139003936, -0.064245492242207852, 0.011508302534349396},
  {0.064245492242207852, 0.76616212139003936, 0.63942796347491015, 0.011508302534349396},
  {-0.064245492242207852, 0.76616212139003936, 0.63942796347491015, 0.011508302534349396},
  {0.064245492242207852, -0.76616212139003936, 0.63942796347491015, 0.011508302534349396},
  {0.064245492242207852, 0.76616212139003936, -0.63942796347491015, 0.011508302534349396},
  {-0.064245492242207852, -0.76616212139003936, 0.63942796347491015, 0.011508302534349396},
  {0.064245492242207852, -0.76616212139003936, -0.63942796347491015, 0.011508302534349396},
  {-0.064245492242207852, 0.76616212139003936, -0.63942796347491015, 0.011508302534349396},
  {-0.064245492242207852, -0.76616212139003936, -0.63942796347491015, 0.011508302534349396},
  {0.064245492242207852, 0.63942796347491015, 0.76616212139003936, 0.011508302534349396},
  {-0.064245492242207852, 0.63942796347491015, 0.76616212139003936, 0.011508302534349396},
  {0.064245492242207852, -0.63942796347491015, 0.76616212139003936, 0.011508302534349396},
  {0.064245492242207852, 0.63942796347491015, -0.76616212139003936, 0.011508302534349396},
  {-0.064245492242207852, -0.63942796347491015, 0.76616212139003936, 0.011508302534349396},
  {0.064245492242207852, -0.63942796347491015, -0.76616212139003936, 0.011508302534349396},
  {-0.064245492242207852, 0.63942796347491015, -0.76616212139003936, 0.011508302534349396},
  {-0.064245492242207852, -0.63942796347491015, -0.76616212139003936, 0.011508302534349396},
  {0.76616212139003936, 0.064245492242207852, 0.63942796347491015, 0.011508302534349396},
  {-0.76616212139003936, 0.064245492242207852, 0.63942796347491015, 0.011508302534349396},
  {0.76616212139003936, -0.064245492242207852, 0.63942796347491015, 0.011508302534349396},
  {0.76616212139003936, 0.064245492242207852, -0.63942796347491015, 0.011508302534349396},
  {-0.76616212139003936, -0.064245492242207852, 0.63942796347491015, 0.011508302534349396},
  {0.76616212139003936, -0.064245492242207852, -0.63942796347491015, 0.011508302534349396},
  {-0.76616212139003936, 0.064245492242207852, -0.63942796347491015, 0.011508302534349396},
  {-0.76616212139003936, -0.064245492242207852, -0.63942796347491015, 0.011508302534349396},
  {0.63942796347491015, 0.064245492242207852, 0.76616212139003936, 0.011508302534349396},
  {-0.63942796347491015, 0.064245492242207852, 0.76616212139003936, 0.011508302534349396},
  {0.63942796347491015, -0.064245492242207852, 0.76616212139003936, 0.011508302534349396},
  {0.63942796347491015, 0.064245492242207852, -0.76616212139003936, 0.011508302534349396},
  {-0.63942796347491015, -0.064245492242207852, 0.76616212139003936, 0.011508302534349396},
  {0.63942796347491015, -0.064245492242207852, -0.76616212139003936, 0.011508302534349396},
  {-0.63942796347491015, 0.064245492242207852, -0.76616212139003936, 0.011508302534349396},
  {-0.63942796347491015, -0.064245492242207852, -0.76616212139003936, 0.011508302534349396},
  {0.75535841435335105, 0.6269805509024392, 0.19060182227792313, 0.011475079348200834},
  {-0.75535841435335105, 0.6269805509024392, 0.19060182227792313, 0.011475079348200834},
  {0.75535841435335105, -0.6269805509024392, 0.19060182227792313, 0.011475079348200834},
  {0.75535841435335105, 0.6269805509024392, -0.19060182227792313, 0.011475079348200834},
  {-0.75535841435335105, -0.6269805509024392, 0.19060182227792313, 0.011475079348200834},
  {0.75535841435335105, -0.6269805509024392, -0.19060182227792313, 0.011475079348200834},
  {-0.75535841435335105, 0.6269805509024392, -0.19060182227792313, 0.011475079348200834},
  {-0.75535841435335105, -0.6269805509024392, -0.19060182227792313, 0.011475079348200834},
  {0.6269805509024392, 0.75535841435335105, 0.19060182227792313, 0.011475079348200834},
  {-0.6269805509024392, 0.75535841435335105, 0.19060182227792313, 0.011475079348200834},
  {0.6269805509024392, -0.75535841435335105, 0.19060182227792313, 0.011475079348200834},
  {0.6269805509024392, 0.75535841435335105, -0.19060182227792313, 0.011475079348200834},
  {-0.6269805509024392, -0.75535841435335105, 0.19060182227792313, 0.011475079348200834},
  {0.6269805509024392, -0.75535841435335105, -0.19060182227792313, 0.011475079348200834},
  {-0.6269805509024392, 0.75535841435335105, -0.19060182227792313, 0.011475079348200834},
  {-0.6269805509024392, -0.75535841435335105, -0.19060182227792313, 0.011475079348200834},
  {0.19060182227792313, 0.75535841435335105, 0.6269805509024392, 0.011475079348200834},
  {-0.19060182227792313, 0.75535841435335105, 0.6269805509024392, 0.011475079348200834},
  {0.19060182227792313, -0.75535841435335105, 0.6269805509024392, 0.011475079348200834},
  {0.19060182227792313, 0.75535841435335105, -0.6269805509024392, 0.011475079348200834},
  {-0.19060182227792313, -0.75535841435335105, 0.6269805509024392, 0.011475079348200834},
  {0.19060182227792313, -0.75535841435335105, -0.6269805509024392, 0.011475079348200834},
  {-0.19060182227792313, 0.75535841435335105, -0.6269805509024392, 0.011475079348200834},
  {-0.19060182227792313, -0.75535841435335105, -0.6269805509024392, 0.011475079348200834},
  {0.19060182227792313, 0.6269805509024392, 0.75535841435335105, 0.011475079348200834},
  {-0.19060182227792313, 0.6269805509024392, 0.75535841435335105, 0.011475079348200834},
  {0.19060182227792313, -0.6269805509024392, 0.75535841435335105, 0.011475079348200834},
  {0.19060182227792313, 0.6269805509024392, -0.75535841435335105, 0.011475079348200834},
  {-0.19060182227792313, -0.6269805509024392, 0.75535841435335105, 0.011475079348200834},
  {0.19060182227792313, -0.6269805509024392, -0.75535841435335105, 0.011475079348200834},
  {-0.19060182227792313, 0.6269805509024392, -0.75535841435335105, 0.011475079348200834},
  {-0.19060182227792313, -0.6269805509024392, -0.75535841435335105, 0.011475079348200834},
  {0.75535841435335105, 0.19060182227792313, 0.6269805509024392, 0.011475079348200834},
  {-0.75535841435335105, 0.19060182227792313, 0.6269805509024392, 0.011475079348200834},
  {0.75535841435335105, -0.19060182227792313, 0.6269805509024392, 0.011475079348200834},
  {0.75535841435335105, 0.19060182227792313, -0.6269805509024392, 0.011475079348200834},
  {-0.75535841435335105, -0.19060182227792313, 0.6269805509024392, 0.011475079348200834},
  {0.75535841435335105, -0.19060182227792313, -0.6269805509024392, 0.011475079348200834},
  {-0.75535841435335105, 0.19060182227792313, -0.6269805509024392, 0.011475079348200834},
  {-0.75535841435335105, -0.19060182227792313, -0.6269805509024392, 0.011475079348200834},
  {0.6269805509024392, 0.19060182227792313, 0.75535841435335105, 0.011475079348200834},
  {-0.6269805509024392, 0.19060182227792313, 0.75535841435335105, 0.011475079348200834},
  {0.6269805509024392, -0.19060182227792313, 0.75535841435335105, 0.011475079348200834},
  {0.6269805509024392, 0.19060182227792313, -0.75535841435335105, 0.011475079348200834},
  {-0.6269805509024392, -0.19060182227792313, 0.75535841435335105, 0.011475079348200834},
  {0.6269805509024392, -0.19060182227792313, -0.75535841435335105, 0.011475079348200834},
  {-0.6269805509024392, 0.19060182227792313, -0.75535841435335105, 0.011475079348200834},
  {-0.6269805509024392, -0.19060182227792313, -0.75535841435335105, 0.011475079348200834},
  {0.73443057575595028, 0.60311616930963097, 0.31122759471496081, 0.011445216092627289},
  {-0.73443057575595028, 0.60311616930963097, 0.31122759471496081, 0.011445216092627289},
  {0.73443057575595028, -0.60311616930963097, 0.31122759471496081, 0.011445216092627289},
  {0.73443057575595028, 0.60311616930963097, -0.31122759471496081, 0.011445216092627289},
  {-0.73443057575595028, -0.60311616930963097, 0.31122759471496081, 0.011445216092627289},
  {0.73443057575595028, -0.60311616930963097, -0.31122759471496081, 0.011445216092627289},
  {-0.73443057575595028, 0.60311616930963097, -0.31122759471496081, 0.011445216092627289},
  {-0.73443057575595028, -0.60311616930963097, -0.31122759471496081, 0.011445216092627289},
  {0.60311616930963097, 0.73443057575595028, 0.31122759471496081, 0.011445216092627289},
  {-0.60311616930963097, 0.73443057575595028, 0.31122759471496081, 0.011445216092627289},
  {0.60311616930963097, -0.73443057575595028, 0.31122759471496081, 0.011445216092627289},
  {0.60311616930963097, 0.73443057575595028, -0.31122759471496081, 0.011445216092627289},
  {-0.60311616930963097, -0.73443057575595028, 0.31122759471496081, 0.011445216092627289},
  {0.60311616930963097, -0.73443057575595028, -0.31122759471496081, 0.011445216092627289},
  {-0.60311616930963097, 0.73443057575595028, -0.31122759471496081, 0.011445216092627289},
  {-0.60311616930963097, -0.73443057575595028, -0.31122759471496081, 0.011445216092627289},
  {0.31122759471496081, 0.73443057575595028, 0.60311616930963097, 0.011445216092627289},
  {-0.31122759471496081, 0.73443057575595028, 0.60311616930963097, 0.011445216092627289},
  {0.31122759471496081, -0.73443057575595028, 0.60311616930963097, 0.011445216092627289},
  {0.31122759471496081, 0.73443057575595028, -0.60311616930963097, 0.011445216092627289},
  {-0.31122759471496081, -0.73443057575595028, 0.60311616930963097, 0.011445216092627289},
  {0.31122759471496081, -0.73443057575595028, -0.60311616930963097, 0.011445216092627289},
  {-0.31122759471496081, 0.73443057575595028, -0.60311616930963097, 0.011445216092627289},
  {-0.31122759471496081, -0.73443057575595028, -0.60311616930963097, 0.011445216092627289},
  {0.31122759471496081, 0.60311616930963097, 0.73443057575595028, 0.011445216092627289},
  {-0.31122759471496081, 0.60311616930963097, 0.73443057575595028, 0.011445216092627289},
  {0.31122759471496081, -0.60311616930963097, 0.73443057575595028, 0.011445216092627289},
  {0.31122759471496081, 0.60311616930963097, -0.73443057575595028, 0.011445216092627289},
  {-0.31122759471496081, -0.60311616930963097, 0.73443057575595028, 0.011445216092627289},
  {0.31122759471496081, -0.60311616930963097, -0.73443057575595028, 0.011445216092627289},
  {-0.31122759471496081, 0.60311616930963097, -0.73443057575595028, 0.011445216092627289},
  {-0.31122759471496081, -0.60311616930963097, -0.73443057575595028, 0.011445216092627289},
  {0.73443057575595028, 0.31122759471496081, 0.60311616930963097, 0.011445216092627289},
  {-0.73443057575595028, 0.31122759471496081, 0.60311616930963097, 0.011445216092627289},
  {0.73443057575595028, -0.31122759471496081, 0.60311616930963097, 0.011445216092627289},
  {0.73443057575595028, 0.31122759471496081, -0.60311616930963097, 0.011445216092627289},
  {-0.73443057575595028, -0.31122759471496081, 0.60311616930963097, 0.011445216092627289},
  {0.73443057575595028, -0.31122759471496081, -0.60311616930963097, 0.011445216092627289},
  {-0.73443057575595028, 0.31122759471496081, -0.60311616930963097, 0.011445216092627289},
  {-0.73443057575595028, -0.31122759471496081, -0.60311616930963097, 0.011445216092627289},
  {0.60311616930963097, 0.31122759471496081, 0.73443057575595028, 0.011445216092627289},
  {-0.60311616930963097, 0.31122759471496081, 0.73443057575595028, 0.011445216092627289},
  {0.60311616930963097, -0.31122759471496081, 0.73443057575595028, 0.011445216092627289},
  {0.60311616930963097, 0.31122759471496081, -0.73443057575595028, 0.011445216092627289},
  {-0.60311616930963097, -0.31122759471496081, 0.73443057575595028, 0.011445216092627289},
  {0.60311616930963097, -0.31122759471496081, -0.73443057575595028, 0.011445216092627289},
  {-0.60311616930963097, 0.31122759471496081, -0.73443057575595028, 0.011445216092627289},
  {-0.60311616930963097, -0.31122759471496081, -0.73443057575595028, 0.011445216092627289},
  {0.70438371840217651, 0.56937024984684415, 0.42386447815223383, 0.011442635813972176},
  {-0.70438371840217651, 0.56937024984684415, 0.42386447815223383, 0.011442635813972176},
  {0.70438371840217651, -0.56937024984684415, 0.42386447815223383, 0.011442635813972176},
  {0.70438371840217651, 0.56937024984684415, -0.42386447815223383, 0.011442635813972176},
  {-0.70438371840217651, -0.56937024984684415, 0.42386447815223383, 0.011442635813972176},
  {0.70438371840217651, -0.56937024984684415, -0.42386447815223383, 0.011442635813972176},
  {-0.70438371840217651, 0.56937024984684415, -0.42386447815223383, 0.011442635813972176},
  {-0.70438371840217651, -0.56937024984684415, -0.42386447815223383, 0.011442635813972176},
  {0.56937024984684415, 0.70438371840217651, 0.42386447815223383, 0.011442635813972176},
  {-0.56937024984684415, 0.70438371840217651, 0.42386447815223383, 0.011442635813972176},
  {0.56937024984684415, -0.70438371840217651, 0.42386447815223383, 0.011442635813972176},
  {0.56937024984684415, 0.70438371840217651, -0.42386447815223383, 0.011442635813972176},
  {-0.56937024984684415, -0.70438371840217651, 0.42386447815223383, 0.011442635813972176},
  {0.56937024984684415, -0.70438371840217651, -0.42386447815223383, 0.011442635813972176},
  {-0.56937024984684415, 0.70438371840217651, -0.42386447815223383, 0.011442635813972176},
  {-0.56937024984684415, -0.70438371840217651, -0.42386447815223383, 0.011442635813972176},
  {0.42386447815223383, 0.70438371840217651, 0.56937024984684415, 0.011442635813972176},
  {-0.42386447815223383, 0.70438371840217651, 0.56937024984684415, 0.011442635813972176},
  {0.42386447815223383, -0.70438371840217651, 0.56937024984684415, 0.011442635813972176},
  {0.42386447815223383, 0.70438371840217651, -0.56937024984684415, 0.011442635813972176},
  {-0.42386447815223383, -0.70438371840217651, 0.56937024984684415, 0.011442635813972176},
  {0.42386447815223383, -0.70438371840217651, -0.56937024984684415, 0.011442635813972176},
  {-0.42386447815223383, 0.70438371840217651, -0.56937024984684415, 0.011442635813972176},
  {-0.42386447815223383, -0.70438371840217651, -0.56937024984684415, 0.011442635813972176},
  {0.42386447815223383, 0.56937024984684415, 0.70438371840217651, 0.011442635813972176},
  {-0.42386447815223383, 0.56937024984684415, 0.70438371840217651, 0.011442635813972176},
  {0.42386447815223383, -0.56937024984684415, 0.70438371840217651, 0.011442635813972176},
  {0.42386447815223383, 0.56937024984684415, -0.70438371840217651, 0.011442635813972176},
  {-0.42386447815223383, -0.56937024984684415, 0.70438371840217651, 0.011442635813972176},
  {0.42386447815223383, -0.56937024984684415, -0.70438371840217651, 0.011442635813972176},
  {-0.42386447815223383, 0.56937024984684415, -0.70438371840217651, 0.011442635813972176},
  {-0.42386447815223383, -0.56937024984684415, -0.70438371840217651, 0.011442635813972176},
  {0.70438371840217651, 0.42386447815223383, 0.56937024984684415, 0.011442635813972176},
  {-0.70438371840217651, 0.42386447815223383, 0.56937024984684415, 0.011442635813972176},
  {0.70438371840217651, -0.42386447815223383, 0.56937024984684415, 0.011442635813972176},
  {0.70438371840217651, 0.42386447815223383, -0.56937024984684415, 0.011442635813972176},
  {-0.70438371840217651, -0.42386447815223383, 0.56937024984684415, 0.011442635813972176},
  {0.70438371840217651, -0.42386447815223383, -0.56937024984684415, 0.011442635813972176},
  {-0.70438371840217651, 0.42386447815223383, -0.56937024984684415, 0.011442635813972176},
  {-0.70438371840217651, -0.42386447815223383, -0.56937024984684415, 0.011442635813972176},
  {0.56937024984684415, 0.42386447815223383, 0.70438371840217651, 0.011442635813972176},
  {-0.56937024984684415, 0.42386447815223383, 0.70438371840217651, 0.011442635813972176},
  {0.56937024984684415, -0.42386447815223383, 0.70438371840217651, 0.011442635813972176},
  {0.56937024984684415, 0.42386447815223383, -0.70438371840217651, 0.011442635813972176},
  {-0.56937024984684415, -0.42386447815223383, 0.70438371840217651, 0.011442635813972176},
  {0.56937024984684415, -0.42386447815223383, -0.70438371840217651, 0.011442635813972176},
  {-0.56937024984684415, 0.42386447815223383, -0.70438371840217651, 0.011442635813972176},
  {-0.56937024984684415, -0.42386447815223383, -0.70438371840217651, 0.011442635813972176},
};

SphereRule make(const double (*rows)[4], int count, int degree) {
  SphereRule r;
  r.degree = degree;
  for (int i = 0; i < count; ++i) {
    r.directions.emplace_back(rows[i][0], rows[i][1], rows[i][2]);
    r.weights.push_back(rows[i][3]);
  }
  return r;
}

}  // namespace

std::vector<int> lebedev_sizes() { return {110, 302, 590, 1202}; }

SphereRule lebedev(int points) {
  switch (points) {
    case 110: return make(kRule110, 110, 17);
    case 302: return make(kRule302, 302, 29);
    case 590: return make(kRule590, 590, 41);
    case 1202: return make(kRule1202, 1202, 59);
  }
  throw std::invalid_argument("lebedev: unsupported point count");
}

}  // namespace tat

"""Reference tree drawings for the two worked winners, as printed by the original tool."""

TA_WINNER = """\
                                 word
                                   |
                                   .
                                   |
                                  ft
                                   |
                                   .
                                   |
                                  syl
                                   |
                          .---------------------.
                          |                     |
                         rt                     m
                          |                     |
                      .-----------.             .
                      |           |             |
               spread_glottis  coronal         rt
                                                |
                                            .--------.
                                            |        |
                                        sonorant  dorsal
"""

HOND_WINNER = """\
                                word
                                  |
                                  .
                                  |
                                 ft
                                  |
                                  .
                                  |
                                 syl
                                  |
        .----------------.---------------------.----------------.
        |                |                     |                |
       rt                m                     m               {}
        |                |                     |                |
        .                .                     .                .
        |                |                     |                |
  spread_glottis        rt                    rt               rt
                         |                     |                |
                     .--------.        .-------.-------.        .
                     |        |        |       |       |        |
                 sonorant  dorsal  sonorant  nasal  coronal  coronal
"""

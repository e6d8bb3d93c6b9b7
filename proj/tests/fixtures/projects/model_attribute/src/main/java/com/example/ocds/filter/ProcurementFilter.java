package com.example.ocds.filter;

import java.util.List;

public class ProcurementFilter extends BaseFilter {
    public static final int MAX = 10;
    private static int counter;

    private String text;
    private List<String> procuringEntityId;
    private boolean onlyPublished;
}
